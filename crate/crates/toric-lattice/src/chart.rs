use symbolic_core::linalg;
use symbolic_core::{int, ExponentVector, Rational};

use crate::decomposition::Decomposition;
use crate::ToricError;

/// Affine chart of a unimodular maximal cell: coordinates dual to the scaled
/// vertices, slot i pairing to 1 with `vertex_order[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartDescriptor {
    pub cell: usize,
    pub vertex_order: Vec<usize>,
    pub coordinates: Vec<ExponentVector>,
}

fn as_integer(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().try_into().ok()
    } else {
        None
    }
}

impl Decomposition {
    /// Chart with vertices in increasing id order.
    pub fn chart_basis(&self, cell: usize) -> Result<ChartDescriptor, ToricError> {
        let order = self.cells()[cell].clone();
        self.chart_basis_ordered(cell, &order)
    }

    /// Chart whose slots follow `order` (a permutation of the cell's vertices).
    pub fn chart_basis_ordered(&self, cell: usize, order: &[usize]) -> Result<ChartDescriptor, ToricError> {
        let c = &self.cells()[cell];
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != *c {
            return Err(ToricError::Input(format!("{order:?} does not list the vertices of cell {cell}")));
        }
        if !self.is_simplicial(cell) {
            return Err(ToricError::NotSimplicial(cell));
        }
        let det = self.normalized_det(order);
        if det != int(1) && det != int(-1) {
            return Err(ToricError::NonUnimodular {
                cell,
                det: det.to_string(),
            });
        }
        // columns are the scaled vertices; rows of the inverse are the dual basis
        let cols: Vec<Vec<Rational>> = order.iter().map(|&v| self.scaled_vertex(v)).collect();
        let s = linalg::transpose(&cols);
        let inv = linalg::inverse(&s).map_err(|_| ToricError::NotSimplicial(cell))?;
        let mut coords = Vec::with_capacity(inv.len());
        for row in inv {
            let mut e = Vec::with_capacity(row.len());
            for q in &row {
                let x = as_integer(q).ok_or_else(|| {
                    ToricError::Structure(format!("dual row of cell {cell} is not integral"))
                })?;
                e.push(x as i32);
            }
            coords.push(ExponentVector(e));
        }
        Ok(ChartDescriptor {
            cell,
            vertex_order: order.to_vec(),
            coordinates: coords,
        })
    }

    /// ⟨coordinate_i, scaled vertex_j⟩.
    pub fn pairing_matrix(&self, chart: &ChartDescriptor) -> Vec<Vec<Rational>> {
        chart
            .coordinates
            .iter()
            .map(|e| {
                chart
                    .vertex_order
                    .iter()
                    .map(|&v| {
                        e.iter()
                            .zip(self.scaled_vertex(v))
                            .fold(int(0), |a, (&x, y)| a + int(x as i64) * y)
                    })
                    .collect()
            })
            .collect()
    }

    /// Integer matrix T with a's coordinate exponents = T · b's (row vectors):
    /// a_i = Σ_j T_ij b_j, i.e. U_i = ∏_j W_j^{T_ij}.
    pub fn chart_transition(&self, a: &ChartDescriptor, b: &ChartDescriptor) -> Result<Vec<Vec<i64>>, ToricError> {
        let to_q = |c: &ChartDescriptor| -> Vec<Vec<Rational>> {
            c.coordinates
                .iter()
                .map(|e| e.iter().map(|&x| int(x as i64)).collect())
                .collect()
        };
        let am = to_q(a);
        let bm = to_q(b);
        let binv = linalg::inverse(&bm).map_err(|_| ToricError::Structure("chart is not a basis".into()))?;
        let t = linalg::mul(&am, &binv).expect("square");
        t.iter()
            .map(|row| {
                row.iter()
                    .map(|q| as_integer(q).ok_or_else(|| ToricError::Structure("non-integral transition".into())))
                    .collect()
            })
            .collect()
    }

    /// Normal degree across the wall shared by two adjacent unimodular simplices.
    ///
    /// Both charts are ordered shared vertices first, the private vertex last.
    /// With U (cell a) and W (cell b), each shared slot transforms as
    /// U_i = W_i·W_n^{t_i}; the degree is −t_i at the shared vertex of weight > 1.
    pub fn fiber_normal_degree(&self, a: usize, b: usize) -> Result<i64, ToricError> {
        let ca = &self.cells()[a];
        let cb = &self.cells()[b];
        let shared: Vec<usize> = ca.iter().filter(|v| cb.contains(v)).copied().collect();
        let n = self.n();
        if shared.len() != n - 1 || ca.len() != n || cb.len() != n {
            return Err(ToricError::Input(format!("cells {a} and {b} are not adjacent simplices")));
        }
        let wa = *ca.iter().find(|v| !shared.contains(v)).expect("private vertex");
        let wb = *cb.iter().find(|v| !shared.contains(v)).expect("private vertex");
        let mut oa = shared.clone();
        oa.push(wa);
        let mut ob = shared.clone();
        ob.push(wb);
        let ua = self.chart_basis_ordered(a, &oa)?;
        let ub = self.chart_basis_ordered(b, &ob)?;
        let t = self.chart_transition(&ua, &ub)?;
        let center = shared
            .iter()
            .position(|&v| self.weight(v) > 1)
            .ok_or_else(|| ToricError::Input(format!("wall between {a} and {b} has no vertex of weight > 1")))?;
        Ok(-t[center][n - 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::DiagonalGroupLattice;

    #[test]
    fn standard_simplex_chart_is_identity() {
        let lat = DiagonalGroupLattice::new(3, 1, vec![]).unwrap();
        let d = Decomposition::new(lat, 1, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], vec![vec![0, 1, 2]]).unwrap();
        let ch = d.chart_basis(0).unwrap();
        let id: Vec<ExponentVector> = (0..3).map(|i| ExponentVector::unit(3, i)).collect();
        assert_eq!(ch.coordinates, id);
        let t = d.chart_transition(&ch, &ch).unwrap();
        assert_eq!(t, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(d.pairing_matrix(&ch).iter().enumerate().all(|(i, r)| r
            .iter()
            .enumerate()
            .all(|(j, x)| *x == if i == j { int(1) } else { int(0) })));
    }
}
