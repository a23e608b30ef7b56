//! Cross-checks the chain decompositions against the exact solver on the
//! realized graph.

use serde::{Deserialize, Serialize};

use crate::chain::{
    all_kink_decomposition, all_kink_decomposition_by_peeling, min_witness, realize, segment_decomposition,
    spectrum_chain, ChainSpec,
};
use crate::error::Result;
use crate::solver::{c_prime, per_matching_af, spectrum_from};
use crate::Caps;

/// A deliberate corruption of the chain side, used to show that the
/// harness notices disagreement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    AfPlusOne,
    MaxAfMinusOne,
    SpectrumDropLast,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub check: String,
    pub chain: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub spec: String,
    pub faces: usize,
    pub matchings: usize,
    pub chain_af: usize,
    pub oracle_af: usize,
    pub chain_max_af: usize,
    pub oracle_max_af: usize,
    pub chain_spectrum: Vec<usize>,
    pub oracle_spectrum: Vec<usize>,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn fmt_list(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn verify_chain(spec: &ChainSpec, caps: &Caps, fault: Option<Fault>) -> Result<VerifyReport> {
    let realized = realize(spec);
    let g = &realized.graph;
    let mut mismatches = Vec::new();
    let mut differ = |check: String, chain: String, oracle: String| {
        if chain != oracle {
            mismatches.push(Mismatch { check, chain, oracle });
        }
    };

    let mut chain_af = segment_decomposition(spec).count();
    let blocks = all_kink_decomposition(spec);
    let mut chain_max_af = blocks.total();
    let mut chain_spectrum = spectrum_chain(spec).values;
    match fault {
        Some(Fault::AfPlusOne) => chain_af += 1,
        Some(Fault::MaxAfMinusOne) => chain_max_af -= 1,
        Some(Fault::SpectrumDropLast) => {
            chain_spectrum.pop();
        }
        None => {}
    }

    let all = per_matching_af(g, caps)?;
    let oracle_spectrum = spectrum_from(&all, false).values;
    let oracle_af = *oracle_spectrum.first().expect("chains have perfect matchings");
    let oracle_max_af = *oracle_spectrum.last().expect("chains have perfect matchings");

    differ("af".into(), chain_af.to_string(), oracle_af.to_string());
    differ("max_af".into(), chain_max_af.to_string(), oracle_max_af.to_string());
    differ("spectrum".into(), fmt_list(&chain_spectrum), fmt_list(&oracle_spectrum));

    for (i, (m, r)) in all.iter().enumerate() {
        let cp = c_prime(g, m, caps)?;
        differ(format!("c_prime[{i}]"), cp.len().to_string(), r.value.to_string());
    }

    let peeled = all_kink_decomposition_by_peeling(spec, &realized);
    differ(
        "all_kink_peeling".into(),
        format!("{:?}", Some(&blocks)),
        format!("{:?}", peeled.as_ref()),
    );

    let witness = min_witness(spec, caps)?;
    differ("witness_size".into(), witness.len().to_string(), oracle_af.to_string());

    Ok(VerifyReport {
        spec: spec.to_string(),
        faces: spec.len(),
        matchings: all.len(),
        chain_af,
        oracle_af,
        chain_max_af,
        oracle_max_af,
        chain_spectrum,
        oracle_spectrum,
        mismatches,
    })
}
