//! Torus-fixed points of Hilb^{A_r(4)}(ℂ⁴): the staircase data (l_i, l_ij, l_ijk)
//! of a monomial ideal J₀ and its matching maximal cell of Ξ*.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use ar_singularity::{ArGroup, CellLabel, XiStar};

use crate::character::CharacterClass;
use crate::monomial::{is_regular_quotient, MonomialIdeal};
use crate::IdealError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StaircaseKind {
    DeltaU,
    DeltaD,
    /// 1-based index i of C_i
    C(usize),
    Cprime(usize),
}

impl StaircaseKind {
    pub fn name(&self) -> String {
        match self {
            StaircaseKind::DeltaU => "DeltaU".into(),
            StaircaseKind::DeltaD => "DeltaD".into(),
            StaircaseKind::C(i) => format!("C{i}"),
            StaircaseKind::Cprime(i) => format!("C{i}'"),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "DeltaU" => Some(StaircaseKind::DeltaU),
            "DeltaD" => Some(StaircaseKind::DeltaD),
            _ => {
                let rest = s.strip_prefix('C')?;
                let (digits, prime) = match rest.strip_suffix('\'') {
                    Some(d) => (d, true),
                    None => (rest, false),
                };
                let i: usize = digits.parse().ok().filter(|i| (1..=4).contains(i))?;
                Some(if prime { StaircaseKind::Cprime(i) } else { StaircaseKind::C(i) })
            }
        }
    }
}

/// Pairs in the order 12, 13, 14, 23, 24, 34 (0-based indices).
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    PAIRS.iter().position(|&p| p == (a, b)).expect("distinct indices below 4")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StaircaseData {
    pub r: i64,
    /// l_i: least power with Z_i^{l_i} ∈ J₀
    pub l: [i64; 4],
    /// l_ij in the order of [`PAIRS`]
    pub l_pair: [i64; 6],
    /// l_ijk indexed by the omitted variable s, so l_triple[s] = l_{jkm} with {j,k,m} = {1..4} ∖ {s}
    pub l_triple: [i64; 4],
    pub kind: StaircaseKind,
}

impl StaircaseData {
    pub fn pair(&self, i: usize, j: usize) -> i64 {
        self.l_pair[pair_index(i, j)]
    }

    /// From the l_i and the type, filling l_ij and l_ijk by the type relations
    /// and l_i + l_jkm = l_ij + l_km = r + 2.
    pub fn from_l(r: i64, l: [i64; 4], kind: StaircaseKind) -> Self {
        let offset = |i: usize, j: usize| -> i64 {
            match kind {
                StaircaseKind::DeltaU => r + 1,
                StaircaseKind::DeltaD => r + 2,
                StaircaseKind::C(c) => {
                    if i == c - 1 || j == c - 1 {
                        r + 2
                    } else {
                        r + 1
                    }
                }
                StaircaseKind::Cprime(c) => {
                    if i == c - 1 || j == c - 1 {
                        r + 1
                    } else {
                        r + 2
                    }
                }
            }
        };
        let l_pair = PAIRS.map(|(i, j)| l[i] + l[j] - offset(i, j));
        let l_triple = l.map(|x| r + 2 - x);
        StaircaseData {
            r,
            l,
            l_pair,
            l_triple,
            kind,
        }
    }

    /// Type-independent constraints: the chain 1 ≤ l_ijk ≤ l_ij ≤ l_i ≤ r+1,
    /// l_i + l_jkm = l_ij + l_km = r+2, r+1 ≤ l_i + l_j − l_ij ≤ r+2 and the
    /// range of Σl_i.
    pub fn satisfies_relations(&self) -> bool {
        let r = self.r;
        let l = &self.l;
        if l.iter().any(|&x| !(1..=r + 1).contains(&x)) {
            return false;
        }
        for s in 0..4 {
            let t = self.l_triple[s];
            if l[s] + t != r + 2 || t < 1 {
                return false;
            }
            for (i, j) in (0..4).filter(|&x| x != s).tuple_combinations() {
                if t > self.pair(i, j) {
                    return false;
                }
            }
        }
        for (p, &(i, j)) in PAIRS.iter().enumerate() {
            let lij = self.l_pair[p];
            let (k, m) = (0..4).filter(|&x| x != i && x != j).collect_tuple().expect("two left");
            if lij > l[i].min(l[j]) || lij + self.pair(k, m) != r + 2 {
                return false;
            }
            let d = l[i] + l[j] - lij;
            if !(r + 1..=r + 2).contains(&d) {
                return false;
            }
        }
        let sum: i64 = l.iter().sum();
        let want = match self.kind {
            StaircaseKind::DeltaU => 3 * r + 4,
            StaircaseKind::DeltaD => 3 * r + 6,
            _ => 3 * r + 5,
        };
        sum == want
    }

    /// J₀ = ⟨Z_i^{l_i}, (Z_iZ_j)^{l_ij}, (Z_iZ_jZ_k)^{l_ijk}, Z_1Z_2Z_3Z_4⟩.
    pub fn ideal(&self) -> MonomialIdeal {
        let mut gens = Vec::new();
        for i in 0..4 {
            let mut e = vec![0; 4];
            e[i] = self.l[i];
            gens.push(e);
        }
        for (p, &(i, j)) in PAIRS.iter().enumerate() {
            let mut e = vec![0; 4];
            e[i] = self.l_pair[p];
            e[j] = self.l_pair[p];
            gens.push(e);
        }
        for s in 0..4 {
            let e = (0..4).map(|k| if k == s { 0 } else { self.l_triple[s] }).collect();
            gens.push(e);
        }
        gens.push(vec![1; 4]);
        MonomialIdeal::new(gens)
    }

    /// Ξ* label: a = (r+1) − l in every type, the octahedral center being
    /// c = (2a + 1)/2(r+1), i.e. l_j = (r+1)(1 − c_j) + ½.
    pub fn cell_label(&self) -> CellLabel {
        let a: Vec<i64> = self.l.iter().map(|x| self.r + 1 - x).collect();
        match self.kind {
            StaircaseKind::DeltaU => CellLabel::DeltaU { a },
            StaircaseKind::DeltaD => CellLabel::DeltaD { a },
            StaircaseKind::C(i) => CellLabel::C { a, i },
            StaircaseKind::Cprime(i) => CellLabel::Cp { a, i },
        }
    }

    pub fn from_label(r: i64, label: &CellLabel) -> Result<Self, IdealError> {
        let (a, kind) = match label {
            CellLabel::DeltaU { a } => (a, StaircaseKind::DeltaU),
            CellLabel::DeltaD { a } => (a, StaircaseKind::DeltaD),
            CellLabel::C { a, i } => (a, StaircaseKind::C(*i)),
            CellLabel::Cp { a, i } => (a, StaircaseKind::Cprime(*i)),
            other => return Err(IdealError::Structure(format!("{other:?} is not a cell of Ξ*"))),
        };
        if a.len() != 4 {
            return Err(IdealError::Structure("staircases need n = 4".into()));
        }
        let l = [0, 1, 2, 3].map(|k| r + 1 - a[k]);
        let s = StaircaseData::from_l(r, l, kind);
        if !s.satisfies_relations() {
            return Err(IdealError::Structure(format!("{label:?} gives an invalid staircase")));
        }
        Ok(s)
    }
}

/// Every staircase obeying the relations, materialized and checked regular.
/// Ordered by type (Δ_u, Δ_d, then C_i, C_i′ for each center) and l.
pub fn enumerate_central_ideals(g: &ArGroup) -> Result<Vec<(StaircaseData, MonomialIdeal)>, IdealError> {
    if g.n != 4 {
        return Err(IdealError::Input(format!("staircases need n = 4, got {}", g.n)));
    }
    let r = g.r;
    let mut kinds = vec![StaircaseKind::DeltaU, StaircaseKind::DeltaD];
    for i in 1..=4 {
        kinds.push(StaircaseKind::C(i));
        kinds.push(StaircaseKind::Cprime(i));
    }
    let mut out = Vec::new();
    for kind in kinds {
        for l in (0..4).map(|_| 1..=r + 1).multi_cartesian_product() {
            let s = StaircaseData::from_l(r, [l[0], l[1], l[2], l[3]], kind);
            if !s.satisfies_relations() {
                continue;
            }
            let j = s.ideal();
            let check = is_regular_quotient(&j, g);
            if !check.regular {
                return Err(IdealError::Structure(format!(
                    "staircase {:?} of type {} is not regular: {}",
                    s.l,
                    kind.name(),
                    check.diagnostic.unwrap_or_default()
                )));
            }
            out.push((s, j));
        }
    }
    Ok(out)
}

pub fn cell_of_ideal(s: &StaircaseData, star: &XiStar) -> Result<usize, IdealError> {
    if s.r != star.group.r {
        return Err(IdealError::Input(format!("staircase for r = {}, Ξ* for r = {}", s.r, star.group.r)));
    }
    star.cell_of(&s.cell_label())
        .ok_or_else(|| IdealError::Structure(format!("no cell of Ξ* matches {:?}", s.cell_label())))
}

pub fn ideal_of_cell(star: &XiStar, cell: usize) -> Result<StaircaseData, IdealError> {
    let label = star
        .labels
        .get(cell)
        .ok_or_else(|| IdealError::Input(format!("Ξ* has no cell {cell}")))?;
    StaircaseData::from_label(star.group.r, label)
}

/// The G-graph of a unimodular cell read off the cone alone: in each
/// character class, the monomial whose pairing with every scaled vertex is
/// smallest (every other monomial of the class is then a multiple of it by a
/// chart monomial). `None` if some class has no such minimum.
pub fn cone_staircase(star: &XiStar, cell: usize) -> Option<Vec<Vec<i64>>> {
    let g = &star.group;
    let d = &star.decomposition;
    let verts: Vec<Vec<i64>> = d.cells()[cell]
        .iter()
        .map(|&v| {
            let w = d.weight(v);
            d.vertices()[v].iter().map(|x| x * w).collect()
        })
        .collect();
    let mut classes: BTreeMap<CharacterClass, Vec<Vec<i64>>> = BTreeMap::new();
    for e in (0..g.n).map(|_| 0..=g.r).multi_cartesian_product() {
        classes.entry(CharacterClass::of(g, &e)).or_default().push(e);
    }
    let pair = |e: &[i64]| -> Vec<i64> { verts.iter().map(|v| v.iter().zip(e).map(|(a, b)| a * b).sum()).collect() };
    let mut out = Vec::new();
    for members in classes.values() {
        let pairs: Vec<Vec<i64>> = members.iter().map(|e| pair(e)).collect();
        let best = (0..members.len()).find(|&k| pairs.iter().all(|p| p.iter().zip(&pairs[k]).all(|(x, y)| x >= y)))?;
        out.push(members[best].clone());
    }
    out.sort();
    Some(out)
}
