//! Ξ, the decomposition of Δ cut out by the hyperplanes x_i ∈ ℤ/(r+1).

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use toric_lattice::Decomposition;

use crate::{ArError, ArGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellType {
    DeltaU,
    DeltaD,
    Octahedron,
    /// r = 1, n = 5: the convex hull of the ten midpoints v_ij.
    Hypersimplex,
    /// C_i: the center and the four vertices a + e_i + e_j.
    Center,
    /// C_i′: the center and the three vertices a + e_j + e_k, j, k ≠ i.
    CenterPrime,
    /// One of the four simplices around an inserted octahedron diagonal.
    FlopSimplex,
}

/// Which cell a maximal cell is, with its base point a in y = (r+1)x units.
///
/// Δ_u(a) has vertices a + e_i (Σa = r), Δ_d(a) has vertices a + 1 − e_i
/// (Σa = r + 2 − n), and ◇(a) has vertices a + e_p + e_q (Σa = r − 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellLabel {
    DeltaU { a: Vec<i64> },
    DeltaD { a: Vec<i64> },
    Octahedron { a: Vec<i64> },
    Hypersimplex,
    /// `i` is 1-based.
    C { a: Vec<i64>, i: usize },
    Cp { a: Vec<i64>, i: usize },
    /// Simplex {P, P̄, eq[t], eq[t+1]} of the octahedron at a cut along `axis`.
    Flop { a: Vec<i64>, axis: u8, t: usize },
}

impl CellLabel {
    pub fn cell_type(&self) -> CellType {
        match self {
            CellLabel::DeltaU { .. } => CellType::DeltaU,
            CellLabel::DeltaD { .. } => CellType::DeltaD,
            CellLabel::Octahedron { .. } => CellType::Octahedron,
            CellLabel::Hypersimplex => CellType::Hypersimplex,
            CellLabel::C { .. } => CellType::Center,
            CellLabel::Cp { .. } => CellType::CenterPrime,
            CellLabel::Flop { .. } => CellType::FlopSimplex,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CellCounts {
    pub delta_u: usize,
    pub delta_d: usize,
    pub octahedra: usize,
    pub hypersimplices: usize,
}

impl CellCounts {
    pub fn total(&self) -> usize {
        self.delta_u + self.delta_d + self.octahedra + self.hypersimplices
    }
}

/// An octahedral cell ◇(a) of Ξ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Octahedron {
    pub a: Vec<i64>,
    /// index of the cell in Ξ
    pub cell: usize,
    /// 2a + 1, over the denominator 2(r+1)
    pub center: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct Xi {
    pub group: ArGroup,
    pub decomposition: Decomposition,
    pub labels: Vec<CellLabel>,
    pub octahedra: Vec<Octahedron>,
}

/// Nonnegative integer vectors of length n summing to s, lexicographically.
pub fn compositions(n: usize, s: i64) -> Vec<Vec<i64>> {
    if s < 0 {
        return vec![];
    }
    if n == 1 {
        return vec![vec![s]];
    }
    let mut out = Vec::new();
    for first in (0..=s).rev() {
        for mut rest in compositions(n - 1, s - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

pub(crate) fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn doubled(y: &[i64]) -> Vec<i64> {
    y.iter().map(|x| 2 * x).collect()
}

/// a + e_p + e_q (0-based p ≠ q)
pub(crate) fn oct_vertex(a: &[i64], p: usize, q: usize) -> Vec<i64> {
    let mut v = a.to_vec();
    v[p] += 1;
    v[q] += 1;
    v
}

fn check_supported(g: &ArGroup) -> Result<(), ArError> {
    let ok = match g.n {
        4 => (1..=8).contains(&g.r),
        2 | 3 | 5 => g.r == 1,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(ArError::Unsupported { r: g.r, n: g.n })
    }
}

pub(crate) struct VertexTable {
    pub points: Vec<Vec<i64>>,
    pub index: std::collections::HashMap<Vec<i64>, usize>,
}

impl VertexTable {
    /// N ∩ Δ, doubled.
    pub fn lattice_points(g: &ArGroup) -> Self {
        let points: Vec<Vec<i64>> = compositions(g.n, g.r + 1).iter().map(|y| doubled(y)).collect();
        let index = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        VertexTable { points, index }
    }

    pub fn id(&self, y: &[i64]) -> usize {
        self.index[&doubled(y)]
    }

    pub fn push(&mut self, p: Vec<i64>) -> usize {
        let id = self.points.len();
        self.index.insert(p.clone(), id);
        self.points.push(p);
        id
    }
}

/// Build Ξ from the unit-cube slicing of (r+1)Δ.
///
/// A cube [b, b+1] meets Σy = r+1 in a slice at height r+1−Σb; heights 1 and
/// n−1 give the simplices Δ_u(b) and Δ_d(b), height 2 with n = 4 the octahedron.
pub fn build_xi(g: ArGroup) -> Result<Xi, ArError> {
    check_supported(&g)?;
    let n = g.n;
    let r = g.r;
    let table = VertexTable::lattice_points(&g);
    let mut cells = Vec::new();
    let mut labels = Vec::new();
    for a in compositions(n, r) {
        cells.push((0..n).map(|i| table.id(&add(&a, &unit(n, i)))).collect::<Vec<_>>());
        labels.push(CellLabel::DeltaU { a });
    }
    match n {
        3 | 4 => {
            for a in compositions(n, r + 2 - n as i64) {
                let big: Vec<i64> = a.iter().map(|x| x + 1).collect();
                let cell = (0..n)
                    .map(|i| {
                        let mut v = big.clone();
                        v[i] -= 1;
                        table.id(&v)
                    })
                    .collect();
                cells.push(cell);
                labels.push(CellLabel::DeltaD { a });
            }
        }
        5 => {
            let cell = (0..n).tuple_combinations().map(|(p, q)| table.id(&oct_vertex(&vec![0; n], p, q))).collect();
            cells.push(cell);
            labels.push(CellLabel::Hypersimplex);
        }
        _ => {}
    }
    let mut octahedra = Vec::new();
    if n == 4 {
        for a in compositions(4, r - 1) {
            let cell = (0..4).tuple_combinations().map(|(p, q)| table.id(&oct_vertex(&a, p, q))).collect();
            octahedra.push(Octahedron {
                a: a.clone(),
                cell: cells.len(),
                center: a.iter().map(|x| 2 * x + 1).collect(),
            });
            cells.push(cell);
            labels.push(CellLabel::Octahedron { a });
        }
    }
    let decomposition = Decomposition::new(g.lattice(), g.den(), table.points, cells)?;
    Ok(Xi {
        group: g,
        decomposition,
        labels,
        octahedra,
    })
}

/// Recover the label of a maximal cell of Ξ from its vertex coordinates alone.
///
/// `points` are the cell's vertices over 2(r+1). Six vertices are an
/// octahedron exactly when they are a + e_p + e_q and opposite pairs average
/// to a common center; four are Δ_u when the componentwise minimum a has
/// Σa = r (the facet parallel to ∂Δ sits on the far side) and Δ_d when the
/// componentwise maximum has sum r + 2.
pub fn classify_cell(g: &ArGroup, points: &[Vec<i64>]) -> Result<CellLabel, ArError> {
    let n = g.n;
    let r = g.r;
    let bad = || ArError::Structure(format!("unclassifiable cell {points:?}"));
    if points.iter().any(|p| p.len() != n || p.iter().any(|x| x % 2 != 0)) {
        return Err(bad());
    }
    let ys: Vec<Vec<i64>> = points.iter().map(|p| p.iter().map(|x| x / 2).collect()).collect();
    let lo: Vec<i64> = (0..n).map(|k| ys.iter().map(|y| y[k]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..n).map(|k| ys.iter().map(|y| y[k]).max().unwrap()).collect();
    let same = |want: Vec<Vec<i64>>| -> bool {
        let mut a = ys.clone();
        let mut b = want;
        a.sort();
        b.sort();
        a == b
    };
    match ys.len() {
        k if k == n => {
            if lo.iter().sum::<i64>() == r && same((0..n).map(|i| add(&lo, &unit(n, i))).collect()) {
                return Ok(CellLabel::DeltaU { a: lo });
            }
            if n >= 3 && hi.iter().sum::<i64>() == r + 2 {
                let want = (0..n)
                    .map(|i| {
                        let mut v = hi.clone();
                        v[i] -= 1;
                        v
                    })
                    .collect();
                if same(want) {
                    return Ok(CellLabel::DeltaD {
                        a: hi.iter().map(|x| x - 1).collect(),
                    });
                }
            }
            Err(bad())
        }
        6 if n == 4 => {
            if lo.iter().sum::<i64>() != r - 1
                || !same((0..4).tuple_combinations().map(|(p, q)| oct_vertex(&lo, p, q)).collect())
            {
                return Err(bad());
            }
            let center: Vec<i64> = lo.iter().map(|x| 2 * x + 1).collect();
            // each vertex has an opposite partner with p + p̄ = 2c
            let all_paired = points.iter().all(|p| {
                let partner: Vec<i64> = p.iter().zip(&center).map(|(x, c)| 2 * c - x).collect();
                points.contains(&partner)
            });
            if all_paired {
                Ok(CellLabel::Octahedron { a: lo })
            } else {
                Err(bad())
            }
        }
        10 if n == 5 && r == 1 => {
            if same((0..5).tuple_combinations().map(|(p, q)| oct_vertex(&[0; 5], p, q)).collect()) {
                Ok(CellLabel::Hypersimplex)
            } else {
                Err(bad())
            }
        }
        _ => Err(bad()),
    }
}

impl Xi {
    /// Relabel every cell from geometry and tally the types.
    pub fn classify_cells(&self) -> Result<CellCounts, ArError> {
        let d = &self.decomposition;
        let mut counts = CellCounts::default();
        for cell in d.cells() {
            let pts: Vec<Vec<i64>> = cell.iter().map(|&v| d.vertices()[v].clone()).collect();
            match classify_cell(&self.group, &pts)?.cell_type() {
                CellType::DeltaU => counts.delta_u += 1,
                CellType::DeltaD => counts.delta_d += 1,
                CellType::Octahedron => counts.octahedra += 1,
                CellType::Hypersimplex => counts.hypersimplices += 1,
                _ => return Err(ArError::Structure("refined cell inside Ξ".into())),
            }
        }
        Ok(counts)
    }

    pub fn octahedron_at(&self, center: &[i64]) -> Option<&Octahedron> {
        self.octahedra.iter().find(|o| o.center == center)
    }
}
