use std::collections::{BTreeSet, VecDeque};

use num_integer::Integer;

use crate::ToricError;

/// N = ℤⁿ + Σ ℤ·g/D for integer generators g.
///
/// Membership is decided through the finite subgroup of (ℤ/D)ⁿ generated by
/// the g; its size is the index |N/ℤⁿ|. Equality is equality of lattices,
/// whatever denominator and generators present them.
#[derive(Clone, Debug)]
pub struct DiagonalGroupLattice {
    n: usize,
    den: i64,
    generators: Vec<Vec<i64>>,
    residues: BTreeSet<Vec<i64>>,
}

impl PartialEq for DiagonalGroupLattice {
    fn eq(&self, o: &Self) -> bool {
        let l = self.den.lcm(&o.den);
        self.n == o.n && self.index() == o.index() && self.residues_over(l) == o.residues_over(l)
    }
}

impl Eq for DiagonalGroupLattice {}

impl DiagonalGroupLattice {
    fn residues_over(&self, den: i64) -> BTreeSet<Vec<i64>> {
        let k = den / self.den;
        self.residues.iter().map(|v| v.iter().map(|x| x * k).collect()).collect()
    }

    pub fn new(n: usize, den: i64, generators: Vec<Vec<i64>>) -> Result<Self, ToricError> {
        if den <= 0 {
            return Err(ToricError::Input(format!("denominator {den} must be positive")));
        }
        for g in &generators {
            if g.len() != n {
                return Err(ToricError::Input("generator length differs from n".into()));
            }
            if g.iter().sum::<i64>().rem_euclid(den) != 0 {
                return Err(ToricError::Input(format!(
                    "generator {g:?} does not sum to 0 mod {den}"
                )));
            }
        }
        let reduce = |v: &[i64]| v.iter().map(|x| x.rem_euclid(den)).collect::<Vec<_>>();
        let mut residues = BTreeSet::new();
        let zero = vec![0; n];
        residues.insert(zero.clone());
        let mut queue = VecDeque::from([zero]);
        while let Some(v) = queue.pop_front() {
            for g in &generators {
                let w: Vec<i64> = reduce(&v.iter().zip(g).map(|(a, b)| a + b).collect::<Vec<_>>());
                if residues.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        Ok(DiagonalGroupLattice {
            n,
            den,
            generators,
            residues,
        })
    }

    /// Lattice of A_r(n): denominator r+1, generators e_k + r·e_n for k < n.
    pub fn ar(r: i64, n: usize) -> Result<Self, ToricError> {
        if r < 1 || n < 2 {
            return Err(ToricError::Input(format!("A_{r}({n}) needs r ≥ 1, n ≥ 2")));
        }
        let gens = (0..n - 1)
            .map(|k| {
                let mut g = vec![0; n];
                g[k] = 1;
                g[n - 1] = r;
                g
            })
            .collect();
        Self::new(n, r + 1, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// |N/ℤⁿ| = |G|.
    pub fn index(&self) -> usize {
        self.residues.len()
    }

    /// Generators expressed over another denominator (which must be a multiple of D).
    pub fn generators_over(&self, den: i64) -> Result<Vec<Vec<i64>>, ToricError> {
        if den % self.den != 0 {
            return Err(ToricError::Input(format!(
                "denominator {den} is not a multiple of {}",
                self.den
            )));
        }
        let k = den / self.den;
        Ok(self
            .generators
            .iter()
            .map(|g| g.iter().map(|x| x * k).collect())
            .collect())
    }

    /// Is y/q in N?
    pub fn contains(&self, y: &[i64], q: i64) -> bool {
        let mut t = Vec::with_capacity(y.len());
        for &x in y {
            let num = x * self.den;
            if num % q != 0 {
                return false;
            }
            t.push((num / q).rem_euclid(self.den));
        }
        self.residues.contains(&t)
    }

    /// Least m ≥ 1 with m·y/q ∈ N.
    pub fn weight(&self, y: &[i64], q: i64) -> i64 {
        // q·(y/q) ∈ ℤⁿ ⊆ N, so the loop ends by m = q/gcd
        let g = y.iter().fold(q, |acc, &x| acc.gcd(&x));
        let q = q / g;
        let y: Vec<i64> = y.iter().map(|x| x / g).collect();
        (1..=q)
            .find(|&m| {
                let my: Vec<i64> = y.iter().map(|x| x * m).collect();
                self.contains(&my, q)
            })
            .unwrap_or(q)
    }

    /// Is the integer vector m in M, i.e. ⟨m, g⟩ ≡ 0 mod D for every generator?
    pub fn dual_contains(&self, m: &[i64]) -> bool {
        self.generators
            .iter()
            .all(|g| g.iter().zip(m).map(|(a, b)| a * b).sum::<i64>().rem_euclid(self.den) == 0)
    }

    /// Character of the monomial Z^e: (⟨e, g_k⟩ mod D)_k.
    pub fn character(&self, e: &[i32]) -> Vec<i64> {
        self.generators
            .iter()
            .map(|g| {
                g.iter()
                    .zip(e)
                    .map(|(a, &b)| a * b as i64)
                    .sum::<i64>()
                    .rem_euclid(self.den)
            })
            .collect()
    }
}
