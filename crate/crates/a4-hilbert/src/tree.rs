//! Inclusions m_i ⊂ ⟨m_j⟩ + I(o) along the tree of pieces.

use symbolic_core::{MonomialOrder, WPoly};

use crate::coinvariants::{auxiliary_pieces, piece, pieces};
use crate::invariants::{z_ring, InvariantSet};
use crate::quotient::GroebnerIdeal;
use crate::{A4Error, Check};

/// (from, to): the basis of `to` lies in ⟨from⟩ + I(o).
pub const TREE_EDGES: [(&str, &str); 14] = [
    ("m1", "m2"),
    ("m1", "m3"),
    ("m1", "m4"),
    ("m2", "m5"),
    ("m4", "m5"),
    ("m4", "m6"),
    ("m3", "m6"),
    ("m5", "m8"),
    ("m5", "m9"),
    ("m6", "m9"),
    ("m6", "m7"),
    ("m7", "m10"),
    ("m8", "m10"),
    ("m9", "m10"),
];

/// The three edges not already in ⟨from, Y₁⟩.
pub const NONTRIVIAL_EDGES: [(&str, &str); 3] = [("m6", "m9"), ("m8", "m10"), ("m9", "m10")];

/// ⟨gens⟩ plus the first `invariants` of Y₁, Y₂, Y₃, X.
fn ideal(gens: &[WPoly], invariants: usize) -> Result<GroebnerIdeal, A4Error> {
    let mut all = gens.to_vec();
    all.extend(InvariantSet::new(&z_ring()).origin_ideal().into_iter().take(invariants));
    GroebnerIdeal::new(&all, MonomialOrder::grlex(3))
}

fn residues(q: &GroebnerIdeal, polys: &[WPoly]) -> Result<Vec<WPoly>, A4Error> {
    Ok(polys
        .iter()
        .map(|p| q.reduce(p))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|r| !r.is_zero())
        .collect())
}

/// Does ⟨from, Y₁⟩ already hold `to`? Z₁³ = Z₁Y₁ − Z₁Z₂² − Z₁Z₃² is the typical step.
pub fn edge_is_trivial(from: &str, to: &str) -> Result<bool, A4Error> {
    let all = pieces(&z_ring());
    let q = ideal(&piece(&all, from).basis, 1)?;
    Ok(residues(&q, &piece(&all, to).basis)?.is_empty())
}

pub fn verify_inclusion_tree() -> Result<Vec<Check>, A4Error> {
    let all = pieces(&z_ring());
    let mut out = Vec::new();
    for (from, to) in TREE_EDGES {
        let q = ideal(&piece(&all, from).basis, 4)?;
        let res = residues(&q, &piece(&all, to).basis)?;
        let name = format!("{to} in <{from}> + I(o)");
        out.push(match res.first() {
            None => Check::pass(name),
            Some(r) => Check::fail(name, r.to_string()),
        });
    }
    Ok(out)
}

/// ⟨m₉, I(o)⟩ = ⟨m̄₉, I(o)⟩ and ⟨m₁₀, I(o)⟩ = ⟨m̄₁₀, I(o)⟩, both directions.
pub fn verify_module_equalities() -> Result<Vec<Check>, A4Error> {
    let ring = z_ring();
    let all = pieces(&ring);
    let aux = auxiliary_pieces(&ring);
    let mut out = Vec::new();
    for (a, b) in [("m9", "m9bar"), ("m10", "m10bar")] {
        let pa = &piece(&all, a).basis;
        let pb = &piece(&aux, b).basis;
        for (x, y, xs, ys) in [(a, b, pa, pb), (b, a, pb, pa)] {
            let q = ideal(xs, 4)?;
            let res = residues(&q, ys)?;
            let name = format!("<{y}, I(o)> in <{x}, I(o)>");
            out.push(match res.first() {
                None => Check::pass(name),
                Some(r) => Check::fail(name, r.to_string()),
            });
        }
    }
    Ok(out)
}
