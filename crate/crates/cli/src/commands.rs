use std::fs;
use std::path::Path;

use afkit::chain::{
    all_kink_decomposition, generate, kink_flags, maximal_linear_chain_count, parse_chain, realize,
    segment_decomposition, spectrum_chain, Family,
};
use afkit::io::{read_graph, write_graph, write_z_graph, GraphFile};
use afkit::verify::verify_chain;
use afkit::{
    anti_forcing_edges, forcing_edges, max_anti_forcing, min_anti_forcing, normal_components, per_matching_af,
    spectrum_from, z_connected, z_graph, Caps, EdgeId, Graph, Matching, VertexId,
};
use anyhow::{bail, Context, Result};

use crate::report::Report;
use crate::{ChainTask, ExactTask, Outcome, VerifyArgs};

type Pair = (VertexId, VertexId);

fn pairs(g: &Graph, ids: &[EdgeId]) -> Vec<Pair> {
    ids.iter().map(|&e| g.edge(e)).collect()
}

fn matching_pairs(g: &Graph, m: &Matching) -> Vec<Pair> {
    pairs(g, m.edge_ids())
}

fn load(input: &Path) -> Result<GraphFile> {
    let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    read_graph(&text).with_context(|| format!("parsing {}", input.display()))
}

fn task_name<T: clap::ValueEnum>(t: T) -> String {
    t.to_possible_value().expect("no skipped variants").get_name().to_owned()
}

pub fn exact(input: &Path, task: ExactTask, caps: Caps) -> Result<Outcome> {
    let file = load(input)?;
    let g = &file.graph;
    let mut r = Report::new("exact", input.display().to_string(), task_name(task), caps);
    match task {
        ExactTask::Af => {
            let (value, m) = min_anti_forcing(g, &caps)?;
            r.set("af", value);
            r.set("argmin", matching_pairs(g, &m));
        }
        ExactTask::MaxAf => {
            let (value, argmax) = max_anti_forcing(g, &caps)?;
            r.set("max_af", value);
            r.set("argmax", argmax.iter().map(|m| matching_pairs(g, m)).collect::<Vec<_>>());
            if let Ok(rank) = g.cyclomatic_number() {
                r.set("cyclomatic_number", rank);
                r.set("note", if value < rank { "Af < r" } else { "Af = r" });
            }
        }
        ExactTask::Spectrum => {
            let all = per_matching_af(g, &caps)?;
            r.set("spectrum", spectrum_from(&all, false).values);
            r.set("matchings", all.len());
        }
        ExactTask::PerMatching => {
            let all = per_matching_af(g, &caps)?;
            let rows: Vec<_> = all
                .iter()
                .map(|(m, res)| {
                    serde_json::json!({
                        "matching": matching_pairs(g, m),
                        "af": res.value,
                        "witness": pairs(g, &res.witness),
                    })
                })
                .collect();
            r.set("spectrum", spectrum_from(&all, false).values);
            r.set("per_matching", rows);
        }
        ExactTask::EdgesAntiForcing => r.set("edges", pairs(g, &anti_forcing_edges(g)?)),
        ExactTask::EdgesForcing => r.set("edges", pairs(g, &forcing_edges(g)?)),
        ExactTask::Components => {
            let c = normal_components(g)?;
            r.set("fixed_single", pairs(g, &c.fixed_single));
            r.set("fixed_double", pairs(g, &c.fixed_double));
            r.set("components", c.elementary_components);
        }
    }
    Ok(Outcome::Report(r))
}

pub fn chain(spec_text: &str, task: ChainTask, output: Option<&Path>, caps: Caps) -> Result<Outcome> {
    let spec = parse_chain(spec_text)?;
    let mut r = Report::new("chain", spec.to_string(), task_name(task), caps);
    match task {
        ChainTask::Af => r.set("af", segment_decomposition(&spec).count()),
        ChainTask::MaxAf => r.set("max_af", all_kink_decomposition(&spec).total()),
        ChainTask::Spectrum => r.set("spectrum", spectrum_chain(&spec).values),
        ChainTask::Segments => {
            let d = segment_decomposition(&spec);
            r.set("af", d.count());
            r.set("segments", d.segments);
        }
        ChainTask::Blocks => {
            let d = all_kink_decomposition(&spec);
            r.set("max_af", d.total());
            r.set("blocks", d.blocks);
            r.set("skipped", d.skipped);
        }
        ChainTask::Kinks => r.set("kinks", kink_flags(&spec).flags),
        ChainTask::KCount => r.set("k_count", maximal_linear_chain_count(&spec)),
        ChainTask::Realize => {
            let realized = realize(&spec);
            let text = write_graph(&realized.graph, Some(&realized.faces));
            r.set("vertices", realized.graph.vertex_count());
            r.set("edges", realized.graph.edge_count());
            r.set("faces", realized.faces.interior.len());
            match output {
                Some(path) => {
                    fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
                    r.set("output", path.display().to_string());
                }
                None => return Ok(Outcome::Raw(text, r)),
            }
        }
    }
    Ok(Outcome::Report(r))
}

pub fn verify(args: &VerifyArgs, caps: Caps) -> Result<Outcome> {
    let specs = match (&args.spec, args.family, args.n) {
        (Some(s), _, _) => vec![parse_chain(s)?],
        (None, Some(family), Some(n)) => (0..args.count)
            .map(|k| generate(family, n, &args.modes, args.seed + k))
            .collect::<Result<_, _>>()?,
        _ => bail!("verify needs --spec or --family with --n"),
    };
    let input = match &args.spec {
        Some(_) => specs[0].to_string(),
        None => format!("{} n={} seed={} count={}", args.family.unwrap(), args.n.unwrap(), args.seed, args.count),
    };
    let mut r = Report::new("verify", input, "verify", caps);
    let mut reports = Vec::new();
    for spec in &specs {
        reports.push(verify_chain(spec, &caps, args.fault.map(Into::into))?);
    }
    let failed = reports.iter().filter(|v| !v.ok()).count();
    r.set("checked", reports.len());
    r.set("failed", failed);
    r.set("ok", failed == 0);
    r.set("instances", reports);
    Ok(Outcome::Report(r))
}

pub fn gen(family: Family, n: usize, modes: &str, seed: Option<u64>, caps: Caps) -> Result<Outcome> {
    if family == Family::Random && seed.is_none() {
        bail!("gen random requires --seed");
    }
    let spec = generate(family, n, modes, seed.unwrap_or(0))?;
    let mut r = Report::new("gen", format!("{family} {n}"), "gen", caps);
    r.set("spec", spec.to_string());
    Ok(Outcome::Raw(format!("{spec}\n"), r))
}

pub fn ztg(input: &Path, export: Option<&Path>, caps: Caps) -> Result<Outcome> {
    let file = load(input)?;
    if file.interior.is_empty() {
        bail!("{} has no interior faces (`f` lines)", input.display());
    }
    let faces = file.face_set()?;
    let z = z_graph(&file.graph, &faces, &caps)?;
    let mut r = Report::new("ztg", input.display().to_string(), "ztg", caps);
    r.set("nodes", z.nodes.len());
    r.set("links", z.links.len());
    r.set("connected", z_connected(&z));
    if let Some(path) = export {
        let (graph, sidecar) = write_z_graph(&z);
        let mut side = path.as_os_str().to_owned();
        side.push(".matchings");
        fs::write(path, graph).with_context(|| format!("writing {}", path.display()))?;
        fs::write(&side, sidecar).with_context(|| format!("writing {}", Path::new(&side).display()))?;
        r.set("export", path.display().to_string());
    }
    Ok(Outcome::Report(r))
}
