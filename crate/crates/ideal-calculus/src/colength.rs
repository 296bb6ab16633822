//! Sampled colength certification of the chart ideals I(y).

use serde::{Deserialize, Serialize};
use symbolic_core::{buchberger, colength, int, Colength, MonomialOrder, QPoly, Ring, SampleRng};

use ar_singularity::CellLabel;

use crate::families::chart_ideal_generators;
use crate::IdealError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ColengthReport {
    pub r: i64,
    pub label: CellLabel,
    pub expected: usize,
    /// colength per counted sample, `None` when infinite
    pub colengths: Vec<Option<usize>>,
    /// parameters of each counted sample
    pub samples: Vec<[i64; 4]>,
    pub resampled: usize,
    pub pass: bool,
}

fn count(gens: &[QPoly], order: &MonomialOrder) -> Result<Option<usize>, IdealError> {
    let gb = buchberger(gens, order)?;
    Ok(match colength(&gb, order) {
        Colength::Finite(k) => Some(k),
        Colength::Infinite => None,
    })
}

/// Colength of I(y) at `samples` random parameter tuples (integers in 1..=7),
/// expected (r+1)³. With `lex_too`, each sample is also counted in lex.
pub fn certify_colength_with(
    r: i64,
    label: &CellLabel,
    samples: usize,
    seed: u64,
    lex_too: bool,
) -> Result<ColengthReport, IdealError> {
    if !(1..=3).contains(&r) {
        return Err(IdealError::Input(format!("colength certification is limited to r <= 3, got {r}")));
    }
    let ring = Ring::new(&["Z1", "Z2", "Z3", "Z4"]);
    let grlex = MonomialOrder::grlex(4);
    let lex = MonomialOrder::lex(4);
    let expected = ((r + 1) as usize).pow(3);
    let mut rng = SampleRng::new(seed);
    let mut report = ColengthReport {
        r,
        label: label.clone(),
        expected,
        colengths: Vec::new(),
        samples: Vec::new(),
        resampled: 0,
        pass: true,
    };
    while report.colengths.len() < samples {
        // same stream as SampleRng::param
        let vals = [0; 4].map(|_| rng.int_in(1, 7));
        // a vanishing coordinate is a smaller torus orbit, not a generic point
        if vals.contains(&0) {
            report.resampled += 1;
            continue;
        }
        let params: Vec<QPoly> = vals.iter().map(|&v| QPoly::constant(&ring, int(v))).collect();
        let gens = chart_ideal_generators(r, label, &ring, &params)?;
        let k = count(&gens, &grlex)?;
        let mut ok = k == Some(expected);
        if lex_too {
            ok &= count(&gens, &lex)? == k;
        }
        report.pass &= ok;
        report.colengths.push(k);
        report.samples.push(vals);
    }
    Ok(report)
}

pub fn certify_colength(r: i64, label: &CellLabel, samples: usize, seed: u64) -> Result<ColengthReport, IdealError> {
    certify_colength_with(r, label, samples, seed, false)
}
