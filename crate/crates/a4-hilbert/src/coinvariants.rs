//! The graded pieces m₀..m₁₀ of ℚ(ω)[Z]/I(o).

use serde::Serialize;
use symbolic_core::{parse_poly, Cyclotomic, Env, MonomialOrder, RingRef, WPoly};

use crate::group::{mat_mul, Irrep, GENERATORS, IDENTITY};
use crate::invariants::{f_pair, z_ring, InvariantSet};
use crate::quotient::{express, Quotient};
use crate::A4Error;

#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub label: String,
    pub degree: usize,
    pub basis: Vec<WPoly>,
    pub irreducible: Irrep,
}

/// (label, degree, basis, irreducible), with the scalar multiples as displayed.
const PIECES: [(&str, usize, &[&str], Irrep); 11] = [
    ("m0", 0, &["1"], Irrep::One),
    ("m1", 1, &["Z1", "Z2", "Z3"], Irrep::Three),
    ("m2", 2, &["f"], Irrep::OneOmegaBar),
    ("m3", 2, &["fb"], Irrep::OneOmega),
    ("m4", 2, &["Z2*Z3", "Z3*Z1", "Z1*Z2"], Irrep::Three),
    ("m5", 3, &["f*Z1", "f*w^2*Z2", "f*w*Z3"], Irrep::Three),
    ("m6", 3, &["fb*Z1", "fb*w*Z2", "fb*w^2*Z3"], Irrep::Three),
    ("m7", 4, &["fb^2"], Irrep::OneOmegaBar),
    ("m8", 4, &["f^2"], Irrep::OneOmega),
    ("m9", 4, &["f*w*Z1*Z2", "f*Z2*Z3", "f*w^2*Z3*Z1"], Irrep::Three),
    ("m10", 5, &["fb^2*Z1", "fb^2*w^2*Z2", "fb^2*w*Z3"], Irrep::Three),
];

const AUXILIARY: [(&str, usize, &[&str], Irrep); 2] = [
    ("m9bar", 4, &["fb*w^2*Z1*Z2", "fb*Z2*Z3", "fb*w*Z3*Z1"], Irrep::Three),
    ("m10bar", 5, &["f^2*Z1", "f^2*w*Z2", "f^2*w^2*Z3"], Irrep::Three),
];

pub fn piece_env(ring: &RingRef) -> Env<Cyclotomic> {
    let (f, fb) = f_pair(ring);
    Env::new().with_poly("f", f).with_poly("fb", fb)
}

fn build(table: &[(&str, usize, &[&str], Irrep)], ring: &RingRef) -> Vec<GradedPiece> {
    let env = piece_env(ring);
    table
        .iter()
        .map(|(label, degree, basis, irr)| GradedPiece {
            label: label.to_string(),
            degree: *degree,
            basis: basis.iter().map(|s| parse_poly(s, ring, &env).expect("fixed text parses")).collect(),
            irreducible: *irr,
        })
        .collect()
}

pub fn pieces(ring: &RingRef) -> Vec<GradedPiece> {
    build(&PIECES, ring)
}

/// m̄₉ and m̄₁₀.
pub fn auxiliary_pieces(ring: &RingRef) -> Vec<GradedPiece> {
    build(&AUXILIARY, ring)
}

pub fn piece<'a>(all: &'a [GradedPiece], label: &str) -> &'a GradedPiece {
    all.iter().find(|p| p.label == label).expect("known label")
}

/// Representatives of e, (12)(34), (123), (132).
pub fn class_representatives() -> [crate::group::Mat3; 4] {
    [IDENTITY, GENERATORS[0], GENERATORS[2], mat_mul(&GENERATORS[2], &GENERATORS[2])]
}

pub fn origin_quotient(order: MonomialOrder) -> Result<Quotient, A4Error> {
    let ring = z_ring();
    Quotient::new(&InvariantSet::new(&ring).origin_ideal(), order)
}

/// Character of the action on span(basis) inside the quotient, on the four classes.
pub fn piece_character(q: &Quotient, basis: &[WPoly]) -> Result<Option<[Cyclotomic; 4]>, A4Error> {
    let cols = basis.iter().map(|b| q.coords(b)).collect::<Result<Vec<_>, _>>()?;
    let mut out: Vec<Cyclotomic> = Vec::new();
    for g in class_representatives() {
        let mut tr = Cyclotomic::from_ints(0, 0);
        for (k, b) in basis.iter().enumerate() {
            let image = q.coords(&crate::group::act(b, &g)?)?;
            match express(&cols, &image) {
                Some(c) => tr = tr + c[k].clone(),
                None => return Ok(None),
            }
        }
        out.push(tr);
    }
    Ok(Some(out.try_into().expect("four classes")))
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PieceReport {
    pub label: String,
    pub degree: usize,
    pub irreducible: Irrep,
    pub dim: usize,
    /// rank of the basis modulo I(o)
    pub rank: usize,
    /// None when the span is not stable
    pub character: Option<[String; 4]>,
    pub character_matches: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoinvariantReport {
    pub order: String,
    pub gb_size: usize,
    pub dims_by_degree: Vec<usize>,
    pub total: usize,
    pub pieces: Vec<PieceReport>,
    /// rank of all eleven bases together
    pub joint_rank: usize,
    /// trace of each class on the standard-monomial basis
    pub quotient_character: [String; 4],
    /// Σ of the labelled characters
    pub label_character: [String; 4],
}

impl CoinvariantReport {
    pub fn pass(&self) -> bool {
        self.dims_by_degree == [1, 3, 5, 6, 5, 3]
            && self.total == 23
            && self.joint_rank == 23
            && self.pieces.iter().all(|p| p.rank == p.dim && p.character_matches)
            && self.quotient_character == self.label_character
    }
}

pub fn coinvariant_decomposition(order: MonomialOrder, order_name: &str) -> Result<CoinvariantReport, A4Error> {
    let ring = z_ring();
    let q = origin_quotient(order)?;
    let all = pieces(&ring);
    let mut reports = Vec::new();
    let mut label_sum = vec![Cyclotomic::from_ints(0, 0); 4];
    let mut everything = Vec::new();
    for p in &all {
        let character = piece_character(&q, &p.basis)?;
        let want = p.irreducible.character();
        for (s, w) in label_sum.iter_mut().zip(&want) {
            *s = s.clone() + w.clone();
        }
        reports.push(PieceReport {
            label: p.label.clone(),
            degree: p.degree,
            irreducible: p.irreducible,
            dim: p.basis.len(),
            rank: q.rank(&p.basis)?,
            character_matches: character.as_ref() == Some(&want),
            character: character.map(|c| c.map(|x| x.to_string())),
        });
        everything.extend(p.basis.iter().cloned());
    }
    let traces = class_representatives()
        .iter()
        .map(|g| q.trace(g).map(|t| t.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CoinvariantReport {
        order: order_name.to_string(),
        gb_size: q.gb.len(),
        dims_by_degree: q.dims_by_degree(),
        total: q.dim(),
        pieces: reports,
        joint_rank: q.rank(&everything)?,
        quotient_character: traces.try_into().expect("four classes"),
        label_character: label_sum
            .into_iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .try_into()
            .expect("four classes"),
    })
}
