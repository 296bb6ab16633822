//! Generators of the semigroup M ∩ σ^∨ by bounded enumeration.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use symbolic_core::linalg;
use symbolic_core::{int, Rational, Scalar};

use crate::decomposition::{polytope_faces, Decomposition};
use crate::ToricError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeStatus {
    /// The enumeration reached the degree every minimal generator must respect.
    Certified,
    /// Enumeration stopped before that degree; `needed` is the bound that would certify.
    Unverified { needed: i64 },
}

#[derive(Clone, Debug)]
pub struct DualConeGenerators {
    pub generators: Vec<Vec<i64>>,
    pub degrees: Vec<i64>,
    pub status: ConeStatus,
}

fn dot_q(m: &[i64], v: &[Rational]) -> Rational {
    m.iter().zip(v).fold(int(0), |a, (&x, y)| a + int(x) * y)
}

fn q_to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

impl Decomposition {
    /// Minimal generators of M ∩ σ^∨ for a maximal cell σ (simplicial or not).
    ///
    /// Degree of m is ⟨m, Σ_v m_v·v⟩. All semigroup elements of degree ≤ 2·bound
    /// are listed by solving for m from its pairings with n independent scaled
    /// vertices, then the irreducible ones kept. Every minimal generator lies in
    /// the half-open parallelepiped of some n dual rays, so a degree bound equal
    /// to the sum of the n largest ray degrees is enough to certify.
    pub fn dual_cone_generators(&self, cell: usize, bound: i64) -> Result<DualConeGenerators, ToricError> {
        let n = self.n();
        let verts = self.cells()[cell].clone();
        let scaled: Vec<Vec<Rational>> = verts.iter().map(|&v| self.scaled_vertex(v)).collect();
        let total: Vec<Rational> = (0..n)
            .map(|k| scaled.iter().fold(int(0), |a, s| a + &s[k]))
            .collect();
        let basis = (0..verts.len())
            .combinations(n)
            .find(|s| linalg::rank(&s.iter().map(|&i| scaled[i].clone()).collect()) == n)
            .ok_or(ToricError::NotSimplicial(cell))?;
        let bm: Vec<Vec<Rational>> = basis.iter().map(|&i| scaled[i].clone()).collect();
        // m = B⁻¹ p with B rows the basis vertices
        let binv = linalg::inverse(&bm).expect("independent");
        // integer form: m = Q·p / L
        let l = binv.iter().flatten().fold(BigInt::from(1), |a, x| a.lcm(x.denom()));
        let lq = Rational::from_integer(l.clone());
        let q: Vec<Vec<i64>> = binv
            .iter()
            .map(|row| row.iter().map(|x| (x * &lq).to_integer().to_i64().expect("small")).collect())
            .collect();
        let l = l.to_i64().expect("small");
        let lim = 2 * bound;
        // scaled vertices as integer rows over one denominator
        let sden = scaled.iter().flatten().fold(BigInt::from(1), |a, x| a.lcm(x.denom()));
        let sq = Rational::from_integer(sden.clone());
        let sv: Vec<Vec<i64>> = scaled
            .iter()
            .map(|s| s.iter().map(|x| (x * &sq).to_integer().to_i64().expect("small")).collect())
            .collect();
        let sden = sden.to_i64().expect("small");
        let mut elements: BTreeSet<(i64, Vec<i64>)> = BTreeSet::new();
        let ranges = (0..n).map(|_| 0..=lim).multi_cartesian_product();
        for p in ranges {
            let mut m = Vec::with_capacity(n);
            let mut integral = true;
            for row in &q {
                let s: i64 = row.iter().zip(&p).map(|(a, b)| a * b).sum();
                if s % l != 0 {
                    integral = false;
                    break;
                }
                m.push(s / l);
            }
            if !integral || !self.lattice().dual_contains(&m) {
                continue;
            }
            let pairs: Vec<i64> = sv.iter().map(|s| s.iter().zip(&m).map(|(a, b)| a * b).sum()).collect();
            if pairs.iter().any(|&x| x < 0) {
                continue;
            }
            let deg: i64 = pairs.iter().sum();
            if deg == 0 || deg > lim * sden {
                continue;
            }
            elements.insert((deg / sden, m));
        }
        // m is reducible iff m − g lies in the semigroup for an irreducible g of lower degree
        let set: HashSet<&Vec<i64>> = elements.iter().map(|(_, m)| m).collect();
        let mut gens: Vec<Vec<i64>> = Vec::new();
        let mut degs = Vec::new();
        for (deg, m) in &elements {
            let reducible = gens.iter().any(|g| {
                let b: Vec<i64> = m.iter().zip(g).map(|(x, y)| x - y).collect();
                set.contains(&b)
            });
            if !reducible {
                gens.push(m.clone());
                degs.push(*deg);
            }
        }
        let needed = self.dual_ray_degree_bound(cell, &scaled, &total)?;
        let status = if needed <= lim {
            ConeStatus::Certified
        } else {
            ConeStatus::Unverified { needed }
        };
        Ok(DualConeGenerators {
            generators: gens,
            degrees: degs,
            status,
        })
    }

    // sum of the n largest degrees of primitive M-generators of the dual rays
    fn dual_ray_degree_bound(&self, cell: usize, scaled: &[Vec<Rational>], total: &[Rational]) -> Result<i64, ToricError> {
        let n = self.n();
        let faces = polytope_faces(scaled);
        let mut degs = Vec::new();
        for f in faces.iter().filter(|f| f.len() >= n - 1) {
            let pts: Vec<Vec<Rational>> = f.iter().map(|&i| scaled[i].clone()).collect();
            if linalg::rank(&pts) != n - 1 {
                continue;
            }
            let ns = linalg::nullspace(&pts);
            let mut h = ns[0].clone();
            let off = scaled.iter().find(|s| !dot_q_r(&h, s).is_zero()).expect("full rank");
            if dot_q_r(&h, off) < int(0) {
                h = h.into_iter().map(|x| -x).collect();
            }
            // clear denominators, then the smallest multiple in M
            let l = h.iter().fold(BigInt::from(1), |a, x| a.lcm(x.denom()));
            let hz: Vec<i64> = h
                .iter()
                .map(|x| (x * Rational::from_integer(l.clone())).to_integer().to_i64().expect("small"))
                .collect();
            let g = hz.iter().fold(0i64, |a, &x| a.gcd(&x.abs()));
            let prim: Vec<i64> = hz.iter().map(|x| x / g).collect();
            let k = (1..=self.lattice().denominator())
                .find(|&k| {
                    let m: Vec<i64> = prim.iter().map(|x| x * k).collect();
                    self.lattice().dual_contains(&m)
                })
                .ok_or_else(|| ToricError::Structure(format!("dual ray of cell {cell} misses M")))?;
            let m: Vec<i64> = prim.iter().map(|x| x * k).collect();
            degs.push(q_to_i64(&dot_q(&m, total)).expect("integral").abs());
        }
        degs.sort_unstable_by(|a, b| b.cmp(a));
        Ok(degs.iter().take(n).sum())
    }
}

fn dot_q_r(h: &[Rational], v: &[Rational]) -> Rational {
    h.iter().zip(v).fold(int(0), |a, (x, y)| a + x * y)
}

/// The binomial relations among X_j = Z_j² and Y_j = (∏_{k≠j} Z_k)/Z_j,
/// checked on exponent vectors: x_i y_i = x_j y_j and x_i x_j = y_k y_s.
pub fn verify_4sing() -> Vec<(String, bool)> {
    let x = |j: usize| -> Vec<i32> {
        let mut e = vec![0; 4];
        e[j] = 2;
        e
    };
    let y = |j: usize| -> Vec<i32> {
        let mut e = vec![1; 4];
        e[j] = -1;
        e
    };
    let add = |a: &[i32], b: &[i32]| -> Vec<i32> { a.iter().zip(b).map(|(p, q)| p + q).collect() };
    let mut out = Vec::new();
    for (i, j) in (0..4).tuple_combinations() {
        out.push((
            format!("x{}y{} = x{}y{}", i + 1, i + 1, j + 1, j + 1),
            add(&x(i), &y(i)) == add(&x(j), &y(j)),
        ));
        let rest: Vec<usize> = (0..4).filter(|&k| k != i && k != j).collect();
        out.push((
            format!("x{}x{} = y{}y{}", i + 1, j + 1, rest[0] + 1, rest[1] + 1),
            add(&x(i), &x(j)) == add(&y(rest[0]), &y(rest[1])),
        ));
    }
    out
}
