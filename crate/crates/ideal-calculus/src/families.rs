//! The eigen-polynomials F, G, H and the generator lists of I(y) on each chart of Ξ*.

use serde::{Deserialize, Serialize};
use symbolic_core::{ExponentVector, QPoly, Rational, RingRef, Scalar};

use ar_singularity::CellLabel;

use crate::IdealError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    F,
    G,
    H,
}

/// F_i^{(l)}(β) = Z_i^l − β(Z_jZ_kZ_s)^{r+1−l},
/// G_ij^{(l)}(β) = (Z_iZ_j)^l − β(Z_kZ_s)^{r+1−l},
/// H_i^{(l)}(β) = (Z_jZ_kZ_s)^l − β Z_i^{r+1−l}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorFamily {
    pub kind: FamilyKind,
    /// 0-based: one index for F and H, a pair for G
    pub indices: Vec<usize>,
    pub level: i64,
    pub r: i64,
}

impl GeneratorFamily {
    pub fn f(r: i64, i: usize, level: i64) -> Self {
        GeneratorFamily {
            kind: FamilyKind::F,
            indices: vec![i],
            level,
            r,
        }
    }

    pub fn g(r: i64, i: usize, j: usize, level: i64) -> Self {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        GeneratorFamily {
            kind: FamilyKind::G,
            indices: vec![i, j],
            level,
            r,
        }
    }

    pub fn h(r: i64, i: usize, level: i64) -> Self {
        GeneratorFamily {
            kind: FamilyKind::H,
            indices: vec![i],
            level,
            r,
        }
    }

    /// Exponents of the leading monomial and of the monomial multiplying β.
    pub fn monomials(&self) -> (Vec<i64>, Vec<i64>) {
        let l = self.level;
        let t = self.r + 1 - l;
        let inside = |k: usize| self.indices.contains(&k);
        let (lead, tail): (Vec<i64>, Vec<i64>) = match self.kind {
            FamilyKind::F | FamilyKind::G => (0..4)
                .map(|k| if inside(k) { (l, 0) } else { (0, t) })
                .unzip(),
            FamilyKind::H => (0..4).map(|k| if inside(k) { (0, t) } else { (l, 0) }).unzip(),
        };
        (lead, tail)
    }

    pub fn name(&self) -> String {
        let idx: String = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        let k = match self.kind {
            FamilyKind::F => "F",
            FamilyKind::G => "G",
            FamilyKind::H => "H",
        };
        format!("{k}{idx}^({})", self.level)
    }

    /// The polynomial in `ring`, whose first four variables are Z_1..Z_4.
    pub fn poly(&self, ring: &RingRef, beta: &QPoly) -> QPoly {
        let (lead, tail) = self.monomials();
        let z = |e: &[i64]| -> QPoly { QPoly::monomial(ring, pad(ring, e), Rational::one()) };
        z(&lead) - beta * &z(&tail)
    }
}

fn pad(ring: &RingRef, e: &[i64]) -> ExponentVector {
    let mut v = vec![0i32; ring.nvars()];
    for (k, x) in e.iter().enumerate() {
        v[k] = *x as i32;
    }
    ExponentVector(v)
}

/// One generator of I(y) on a chart: the family (or Z_1Z_2Z_3Z_4 − β when
/// `family` is `None`) with β = ∏ u_l^{beta[l]} in the chart coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartGenerator {
    pub family: Option<GeneratorFamily>,
    pub beta: [i64; 4],
}

impl ChartGenerator {
    pub fn monomials(&self) -> (Vec<i64>, Vec<i64>) {
        match &self.family {
            Some(f) => f.monomials(),
            None => (vec![1; 4], vec![0; 4]),
        }
    }

    pub fn name(&self) -> String {
        match &self.family {
            Some(f) => f.name(),
            None => "Z1Z2Z3Z4".into(),
        }
    }

    pub fn poly(&self, ring: &RingRef, params: &[QPoly]) -> QPoly {
        let mut beta = QPoly::one(ring);
        for (p, &k) in params.iter().zip(&self.beta) {
            beta = &beta * &p.pow(k as u32);
        }
        match &self.family {
            Some(f) => f.poly(ring, &beta),
            None => QPoly::monomial(ring, pad(ring, &[1, 1, 1, 1]), Rational::one()) - beta,
        }
    }
}

fn others(skip: &[usize]) -> Vec<usize> {
    (0..4).filter(|k| !skip.contains(k)).collect()
}

fn unit_beta(slots: &[(usize, i64)]) -> [i64; 4] {
    let mut b = [0; 4];
    for &(k, e) in slots {
        b[k] += e;
    }
    b
}

/// The fifteen generators of I(y) near x_R for a cell R of Ξ* (n = 4):
/// F_1..F_4, G_12..G_34, H_1..H_4, then Z_1Z_2Z_3Z_4 − β.
///
/// Levels are given in the base point a of the cell (y = (r+1)x units).
pub fn chart_generators(r: i64, label: &CellLabel) -> Result<Vec<ChartGenerator>, IdealError> {
    let all = [(0, 1), (1, 1), (2, 1), (3, 1)];
    let mut out = Vec::with_capacity(15);
    match label {
        CellLabel::DeltaU { a } => {
            for i in 0..4 {
                out.push(gen(GeneratorFamily::f(r, i, r + 1 - a[i]), &[(i, 1)]));
            }
            for (i, j) in pairs() {
                let ks = others(&[i, j]);
                out.push(gen(GeneratorFamily::g(r, i, j, a[ks[0]] + a[ks[1]] + 1), &[(i, 1), (j, 1)]));
            }
            for i in 0..4 {
                let rest: Vec<(usize, i64)> = others(&[i]).into_iter().map(|k| (k, 1)).collect();
                out.push(gen(GeneratorFamily::h(r, i, a[i] + 1), &rest));
            }
            out.push(ChartGenerator {
                family: None,
                beta: unit_beta(&all),
            });
        }
        CellLabel::DeltaD { a } => {
            for i in 0..4 {
                let rest: Vec<(usize, i64)> = others(&[i]).into_iter().map(|k| (k, 1)).collect();
                out.push(gen(GeneratorFamily::f(r, i, r + 1 - a[i]), &rest));
            }
            for (i, j) in pairs() {
                let ks = others(&[i, j]);
                out.push(gen(
                    GeneratorFamily::g(r, i, j, a[ks[0]] + a[ks[1]] + 2),
                    &[(ks[0], 1), (ks[1], 1)],
                ));
            }
            for i in 0..4 {
                out.push(gen(GeneratorFamily::h(r, i, a[i] + 1), &[(i, 1)]));
            }
            out.push(ChartGenerator {
                family: None,
                beta: unit_beta(&all),
            });
        }
        CellLabel::C { a, i } => {
            let i = i - 1;
            for j in 0..4 {
                let b = if j == i { unit_beta(&all) } else { unit_beta(&[(i, 1), (j, 1)]) };
                out.push(ChartGenerator {
                    family: Some(GeneratorFamily::f(r, j, r + 1 - a[j])),
                    beta: b,
                });
            }
            for (p, q) in pairs() {
                let ks = others(&[p, q]);
                let (level, b) = if p == i || q == i {
                    // G_ij^{(a_k+a_s+1)}(u_j)
                    let j = if p == i { q } else { p };
                    (a[ks[0]] + a[ks[1]] + 1, unit_beta(&[(j, 1)]))
                } else {
                    // G_jk^{(a_i+a_s+2)}(u_i² u_j u_k)
                    let s = *ks.iter().find(|&&x| x != i).expect("one left");
                    (a[i] + a[s] + 2, unit_beta(&[(i, 2), (p, 1), (q, 1)]))
                };
                out.push(ChartGenerator {
                    family: Some(GeneratorFamily::g(r, p, q, level)),
                    beta: b,
                });
            }
            for j in 0..4 {
                let b = if j == i {
                    unit_beta(&[(i, 1)])
                } else {
                    let rest: Vec<(usize, i64)> = others(&[j]).into_iter().map(|k| (k, 1)).collect();
                    unit_beta(&rest)
                };
                out.push(ChartGenerator {
                    family: Some(GeneratorFamily::h(r, j, a[j] + 1)),
                    beta: b,
                });
            }
            out.push(ChartGenerator {
                family: None,
                beta: unit_beta(&[(0, 1), (1, 1), (2, 1), (3, 1), (i, 1)]),
            });
        }
        CellLabel::Cp { a, i } => {
            let i = i - 1;
            for j in 0..4 {
                let b = if j == i {
                    unit_beta(&[(i, 1)])
                } else {
                    let rest: Vec<(usize, i64)> = others(&[j]).into_iter().map(|k| (k, 1)).collect();
                    unit_beta(&rest)
                };
                out.push(ChartGenerator {
                    family: Some(GeneratorFamily::f(r, j, r + 1 - a[j])),
                    beta: b,
                });
            }
            for (p, q) in pairs() {
                let ks = others(&[p, q]);
                let (level, b) = if p == i || q == i {
                    // G_ij^{(a_k+a_s+2)}(u_i² u_k u_s)
                    (a[ks[0]] + a[ks[1]] + 2, unit_beta(&[(i, 2), (ks[0], 1), (ks[1], 1)]))
                } else {
                    // G_jk^{(a_i+a_s+1)}(u_s)
                    let s = *ks.iter().find(|&&x| x != i).expect("one left");
                    (a[i] + a[s] + 1, unit_beta(&[(s, 1)]))
                };
                out.push(ChartGenerator {
                    family: Some(GeneratorFamily::g(r, p, q, level)),
                    beta: b,
                });
            }
            for j in 0..4 {
                let b = if j == i { unit_beta(&all) } else { unit_beta(&[(i, 1), (j, 1)]) };
                out.push(ChartGenerator {
                    family: Some(GeneratorFamily::h(r, j, a[j] + 1)),
                    beta: b,
                });
            }
            out.push(ChartGenerator {
                family: None,
                beta: unit_beta(&[(0, 1), (1, 1), (2, 1), (3, 1), (i, 1)]),
            });
        }
        other => return Err(IdealError::Input(format!("{other:?} is not a chart of Ξ*"))),
    }
    Ok(out)
}

fn gen(f: GeneratorFamily, slots: &[(usize, i64)]) -> ChartGenerator {
    ChartGenerator {
        family: Some(f),
        beta: unit_beta(slots),
    }
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    crate::staircase::PAIRS.into_iter()
}

/// Generators of I(y) as polynomials; `params` are the four chart coordinates
/// (constants or ring variables) in a ring whose first variables are Z_1..Z_4.
pub fn chart_ideal_generators(r: i64, label: &CellLabel, ring: &RingRef, params: &[QPoly]) -> Result<Vec<QPoly>, IdealError> {
    if params.len() != 4 {
        return Err(IdealError::Input(format!("4 chart parameters expected, got {}", params.len())));
    }
    if ring.nvars() < 4 || (0..4).any(|k| ring.names()[k] != format!("Z{}", k + 1)) {
        return Err(IdealError::Input("ring must start with Z1..Z4".into()));
    }
    Ok(chart_generators(r, label)?.iter().map(|g| g.poly(ring, params)).collect())
}
