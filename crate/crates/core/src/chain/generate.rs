//! Instance families.
//!
//! `random` draws from PCG-64 (`rand_pcg::Pcg64`, seeded with
//! `seed_from_u64`), so a seed names the same chain on every platform.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;
use serde::{Deserialize, Serialize};

use super::{ChainError, ChainSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Hexagons; modes per internal face: `S` (d = 2), `L` (d = 1), `R` (d = 3).
    Hexchain,
    /// Squares; modes per internal face: `S` (d = 1), `B` (d = 0).
    Polyomino,
    StraightPolyomino,
    /// Hexagons with every internal offset odd; modes `L` (d = 1) or `R` (d = 3).
    AllkinkCatahex,
    /// Hexagons alternating with squares, starting with a hexagon. Squares
    /// take d = 1; modes give the internal hexagons as in `Hexchain`.
    Phenylene,
    /// Lengths from {4, 6, 8} and offsets uniform over their range.
    Random,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Hexchain,
        Family::Polyomino,
        Family::StraightPolyomino,
        Family::AllkinkCatahex,
        Family::Phenylene,
        Family::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hexchain => "hexchain",
            Family::Polyomino => "polyomino",
            Family::StraightPolyomino => "straight-polyomino",
            Family::AllkinkCatahex => "allkink-catahex",
            Family::Phenylene => "phenylene",
            Family::Random => "random",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ChainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| ChainError::Syntax(format!("unknown family {s:?}")))
    }
}

fn mode_offsets(modes: &str, count: usize, table: &[(char, usize)], default: usize) -> Result<Vec<usize>, ChainError> {
    if modes.is_empty() {
        return Ok(vec![default; count]);
    }
    let chars: Vec<char> = modes.chars().collect();
    if chars.len() != count {
        return Err(ChainError::BadModes(format!("expected {count} modes, got {}", chars.len())));
    }
    chars
        .into_iter()
        .map(|c| {
            table
                .iter()
                .find(|&&(k, _)| k == c.to_ascii_uppercase())
                .map(|&(_, d)| d)
                .ok_or_else(|| ChainError::BadModes(format!("unknown mode {c:?}")))
        })
        .collect()
}

const HEX_MODES: [(char, usize); 3] = [('S', 2), ('L', 1), ('R', 3)];

/// Builds a chain with `n` faces. `modes` lists one letter per internal face
/// (per internal hexagon for `phenylene`); empty modes select the family
/// default (`S`, or `L` for all-kink catahexes). Only `random` reads `seed`.
pub fn generate(family: Family, n: usize, modes: &str, seed: u64) -> Result<ChainSpec, ChainError> {
    if n == 0 {
        return Err(ChainError::Syntax("a chain needs at least one face".into()));
    }
    let internal = n.saturating_sub(2);
    let no_modes = |m: &str| {
        if m.is_empty() {
            Ok(())
        } else {
            Err(ChainError::BadModes(format!("family takes no modes, got {m:?}")))
        }
    };
    match family {
        Family::Hexchain => ChainSpec::new(vec![6; n], mode_offsets(modes, internal, &HEX_MODES, 2)?),
        Family::Polyomino => {
            ChainSpec::new(vec![4; n], mode_offsets(modes, internal, &[('S', 1), ('B', 0)], 1)?)
        }
        Family::StraightPolyomino => {
            no_modes(modes)?;
            ChainSpec::new(vec![4; n], vec![1; internal])
        }
        Family::AllkinkCatahex => {
            ChainSpec::new(vec![6; n], mode_offsets(modes, internal, &[('L', 1), ('R', 3)], 1)?)
        }
        Family::Phenylene => {
            let lengths: Vec<usize> = (0..n).map(|i| if i % 2 == 0 { 6 } else { 4 }).collect();
            let hexagons = (1..n.saturating_sub(1)).filter(|i| i % 2 == 0).count();
            let mut hex = mode_offsets(modes, hexagons, &HEX_MODES, 2)?.into_iter();
            let offsets = (1..n.saturating_sub(1))
                .map(|i| if i % 2 == 0 { hex.next().expect("one mode per hexagon") } else { 1 })
                .collect();
            ChainSpec::new(lengths, offsets)
        }
        Family::Random => {
            no_modes(modes)?;
            let mut rng = Pcg64::seed_from_u64(seed);
            let lengths: Vec<usize> = (0..n).map(|_| [4, 6, 8][rng.gen_range(0..3)]).collect();
            let offsets = (1..n.saturating_sub(1)).map(|i| rng.gen_range(0..=lengths[i] - 2)).collect();
            ChainSpec::new(lengths, offsets)
        }
    }
}
