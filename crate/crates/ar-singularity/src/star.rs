//! Ξ*: every octahedron of Ξ coned off from its center.

use std::collections::BTreeSet;

use itertools::Itertools;
use toric_lattice::{ChartDescriptor, Decomposition};

use crate::xi::{add, doubled, oct_vertex, unit, CellLabel, Octahedron, VertexTable, Xi};
use crate::{ArError, ArGroup};

#[derive(Clone, Debug)]
pub struct XiStar {
    pub group: ArGroup,
    pub decomposition: Decomposition,
    pub labels: Vec<CellLabel>,
    /// Vertex order of each cell giving the standard chart slots.
    pub slot_orders: Vec<Vec<usize>>,
    pub octahedra: Vec<Octahedron>,
    /// vertex id of each octahedron center, aligned with `octahedra`
    pub centers: Vec<usize>,
}

/// The star of one center: E ≅ P¹×P¹×P¹ as a toric divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalDivisor {
    pub center: usize,
    pub a: Vec<i64>,
    pub cells: Vec<usize>,
    pub link_vertices: Vec<usize>,
    pub link_edges: Vec<(usize, usize)>,
    pub link_triangles: Vec<Vec<usize>>,
}

/// Standard slot order of a simplex cell of Ξ, Ξ* or a resolution.
///
/// Δ_u: slot i is a + e_i. Δ_d: slot i is a + 1 − e_i. C_i: slot i is the
/// center, slot j is a + e_i + e_j. C_i′: slot i is the center, slot j is
/// a + e_k + e_s with {k, s} the complement of {i, j}.
pub(crate) fn slot_order(table: &VertexTable, label: &CellLabel, center: Option<usize>) -> Option<Vec<usize>> {
    let n = table.points[0].len();
    match label {
        CellLabel::DeltaU { a } => Some((0..n).map(|i| table.id(&add(a, &unit(n, i)))).collect()),
        CellLabel::DeltaD { a } => Some(
            (0..n)
                .map(|i| {
                    let mut v: Vec<i64> = a.iter().map(|x| x + 1).collect();
                    v[i] -= 1;
                    table.id(&v)
                })
                .collect(),
        ),
        CellLabel::C { a, i } => {
            let i = i - 1;
            Some(
                (0..4)
                    .map(|j| if j == i { center.unwrap() } else { table.id(&oct_vertex(a, i, j)) })
                    .collect(),
            )
        }
        CellLabel::Cp { a, i } => {
            let i = i - 1;
            Some(
                (0..4)
                    .map(|j| {
                        if j == i {
                            center.unwrap()
                        } else {
                            let rest: Vec<usize> = (0..4).filter(|&x| x != i && x != j).collect();
                            table.id(&oct_vertex(a, rest[0], rest[1]))
                        }
                    })
                    .collect(),
            )
        }
        _ => None,
    }
}

pub(crate) fn rebuild_table(d: &Decomposition) -> VertexTable {
    let points = d.vertices().to_vec();
    let index = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    VertexTable { points, index }
}

impl XiStar {
    /// Replace each ◇(a) by C_i, C_i′ (i = 1..4) around the new vertex c.
    /// Centers are appended after the lattice points so vertex ids of Ξ survive.
    pub fn build(xi: &Xi) -> Result<Self, ArError> {
        if xi.group.n != 4 {
            return Err(ArError::Unsupported {
                r: xi.group.r,
                n: xi.group.n,
            });
        }
        let mut table = rebuild_table(&xi.decomposition);
        let mut cells = Vec::new();
        let mut labels = Vec::new();
        let mut slots = Vec::new();
        for (c, label) in xi.decomposition.cells().iter().zip(&xi.labels) {
            if !matches!(label, CellLabel::Octahedron { .. }) {
                cells.push(c.clone());
                slots.push(slot_order(&table, label, None).expect("simplex"));
                labels.push(label.clone());
            }
        }
        let mut centers = Vec::new();
        for o in &xi.octahedra {
            let cid = table.push(o.center.clone());
            centers.push(cid);
            for i in 1..=4 {
                for label in [CellLabel::C { a: o.a.clone(), i }, CellLabel::Cp { a: o.a.clone(), i }] {
                    let order = slot_order(&table, &label, Some(cid)).expect("simplex");
                    cells.push(order.clone());
                    slots.push(order);
                    labels.push(label);
                }
            }
        }
        let decomposition = Decomposition::new(xi.group.lattice(), xi.group.den(), table.points, cells)?;
        Ok(XiStar {
            group: xi.group,
            decomposition,
            labels,
            slot_orders: slots,
            octahedra: xi.octahedra.clone(),
            centers,
        })
    }

    pub fn cell_of(&self, label: &CellLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Chart of a cell with slots in the standard order.
    pub fn chart(&self, cell: usize) -> Result<ChartDescriptor, ArError> {
        Ok(self.decomposition.chart_basis_ordered(cell, &self.slot_orders[cell])?)
    }

    /// Vertex id of a lattice point given in y = (r+1)x units.
    pub fn vertex_of(&self, y: &[i64]) -> Option<usize> {
        self.decomposition.vertex_index(&doubled(y))
    }

    pub fn exceptional_divisors(&self) -> Vec<ExceptionalDivisor> {
        let d = &self.decomposition;
        self.centers
            .iter()
            .zip(&self.octahedra)
            .map(|(&c, o)| {
                let cells = d.star(c);
                let triangles: Vec<Vec<usize>> = cells
                    .iter()
                    .map(|&k| d.cells()[k].iter().copied().filter(|&v| v != c).collect())
                    .collect();
                let verts: BTreeSet<usize> = triangles.iter().flatten().copied().collect();
                let edges: BTreeSet<(usize, usize)> = triangles
                    .iter()
                    .flat_map(|t| t.iter().copied().tuple_combinations::<(usize, usize)>())
                    .collect();
                ExceptionalDivisor {
                    center: c,
                    a: o.a.clone(),
                    cells,
                    link_vertices: verts.into_iter().collect(),
                    link_edges: edges.into_iter().collect(),
                    link_triangles: triangles,
                }
            })
            .collect()
    }
}
