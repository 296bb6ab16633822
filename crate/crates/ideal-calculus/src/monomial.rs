//! Monomial ideals as minimal generator lists, with explicit complements.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use ar_singularity::ArGroup;

use crate::character::CharacterClass;

fn divides(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    /// Minimal generators, sorted.
    pub generators: Vec<Vec<i64>>,
}

impl MonomialIdeal {
    /// Drops non-minimal generators and sorts.
    pub fn new(gens: Vec<Vec<i64>>) -> Self {
        let mut gens: Vec<Vec<i64>> = gens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let all = gens.clone();
        gens.retain(|g| !all.iter().any(|h| h != g && divides(h, g)));
        MonomialIdeal { generators: gens }
    }

    pub fn n(&self) -> usize {
        self.generators.first().map_or(0, |g| g.len())
    }

    pub fn contains(&self, e: &[i64]) -> bool {
        self.generators.iter().any(|g| divides(g, e))
    }

    pub fn contains_ideal(&self, o: &MonomialIdeal) -> bool {
        o.generators.iter().all(|g| self.contains(g))
    }

    /// Monomials outside the ideal, or `None` when some variable has no pure power
    /// among the generators (infinite complement).
    pub fn complement(&self) -> Option<Vec<Vec<i64>>> {
        let n = self.n();
        if n == 0 {
            return None;
        }
        let mut bound = vec![0i64; n];
        for (i, b) in bound.iter_mut().enumerate() {
            *b = self
                .generators
                .iter()
                .filter(|g| g.iter().enumerate().all(|(k, &x)| k == i || x == 0))
                .map(|g| g[i])
                .min()?;
        }
        let out = bound
            .iter()
            .map(|&b| 0..b)
            .multi_cartesian_product()
            .filter(|e| !self.contains(e))
            .collect();
        Some(out)
    }
}

/// I(o) = ⟨Z_1^{r+1}, …, Z_n^{r+1}, Z_1⋯Z_n⟩, the ideal of the origin.
pub fn io_ideal(g: &ArGroup) -> MonomialIdeal {
    let mut gens: Vec<Vec<i64>> = (0..g.n)
        .map(|i| {
            let mut e = vec![0; g.n];
            e[i] = g.r + 1;
            e
        })
        .collect();
    gens.push(vec![1; g.n]);
    MonomialIdeal::new(gens)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularCheck {
    pub regular: bool,
    pub diagnostic: Option<String>,
}

/// Is ℂ[Z]/J the regular representation: |G| standard monomials with every
/// character appearing exactly once.
pub fn is_regular_quotient(j: &MonomialIdeal, g: &ArGroup) -> RegularCheck {
    let fail = |msg: String| RegularCheck {
        regular: false,
        diagnostic: Some(msg),
    };
    if j.n() != g.n {
        return fail(format!("ideal lives in {} variables, group in {}", j.n(), g.n));
    }
    let Some(comp) = j.complement() else {
        return fail("complement is infinite".into());
    };
    if comp.len() != g.order() {
        return fail(format!("complement has {} monomials, |G| = {}", comp.len(), g.order()));
    }
    let mut seen: BTreeMap<CharacterClass, Vec<i64>> = BTreeMap::new();
    for e in comp {
        let c = CharacterClass::of(g, &e);
        if let Some(prev) = seen.insert(c.clone(), e.clone()) {
            return fail(format!("{prev:?} and {e:?} share the character {:?}", c.residue));
        }
    }
    RegularCheck {
        regular: true,
        diagnostic: None,
    }
}

/// Monomial basis of the ρ-eigenspace of I(o)^⊥: for a representative I of ρ,
/// the vectors K_j = (I − i_j·(1,…,1)) mod (r+1), one per coordinate j.
pub fn eigenspace_generators(g: &ArGroup, rho: &CharacterClass) -> Vec<Vec<i64>> {
    let q = g.r + 1;
    let i = rho.representative();
    let set: BTreeSet<Vec<i64>> = (0..g.n)
        .map(|j| i.iter().map(|x| (x - i[j]).rem_euclid(q)).collect())
        .collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimalization_and_complement() {
        let j = MonomialIdeal::new(vec![vec![1, 0], vec![2, 0], vec![0, 3], vec![1, 1]]);
        assert_eq!(j.generators, vec![vec![0, 3], vec![1, 0]]);
        assert_eq!(j.complement().unwrap().len(), 3);
        assert!(MonomialIdeal::new(vec![vec![1, 1]]).complement().is_none());
    }
}
