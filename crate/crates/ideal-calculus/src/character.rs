//! Characters of A_r(n) on monomials.

use serde::{Deserialize, Serialize};

use ar_singularity::ArGroup;

/// Class of an exponent vector modulo ⟨(r+1)e_i, (1,…,1)⟩, stored as the
/// residues (e_i − e_n) mod (r+1) for i < n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharacterClass {
    pub residue: Vec<i64>,
}

impl CharacterClass {
    pub fn of(g: &ArGroup, e: &[i64]) -> Self {
        let q = g.r + 1;
        let last = e[g.n - 1];
        CharacterClass {
            residue: e[..g.n - 1].iter().map(|x| (x - last).rem_euclid(q)).collect(),
        }
    }

    pub fn trivial(g: &ArGroup) -> Self {
        CharacterClass {
            residue: vec![0; g.n - 1],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.residue.iter().all(|&x| x == 0)
    }

    /// The representative with last entry 0 and the others in [0, r].
    pub fn representative(&self) -> Vec<i64> {
        let mut e = self.residue.clone();
        e.push(0);
        e
    }

    pub fn mul(&self, o: &CharacterClass, g: &ArGroup) -> CharacterClass {
        let q = g.r + 1;
        CharacterClass {
            residue: self.residue.iter().zip(&o.residue).map(|(a, b)| (a + b) % q).collect(),
        }
    }

    /// All (r+1)^{n−1} classes.
    pub fn all(g: &ArGroup) -> Vec<CharacterClass> {
        let q = g.r + 1;
        let mut out = vec![vec![]];
        for _ in 0..g.n - 1 {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (0..q).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(|residue| CharacterClass { residue }).collect()
    }
}
