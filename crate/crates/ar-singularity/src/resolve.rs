//! Crepant resolutions Ξ_choice: every octahedron cut along one of its three
//! diagonals, and flops that swap one diagonal for another.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use toric_lattice::{ChartDescriptor, Decomposition, DecompositionJson};

use crate::star::{rebuild_table, slot_order};
use crate::xi::{oct_vertex, CellLabel, Octahedron, VertexTable, Xi};
use crate::{build_xi, ArError, ArGroup};

/// One diagonal axis in {1, 2, 3} per octahedron, keyed by its center
/// (over the denominator 2(r+1)).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlopChoice {
    pub per_octahedron: BTreeMap<Vec<i64>, u8>,
}

impl FlopChoice {
    /// Same axis everywhere.
    pub fn uniform(xi: &Xi, axis: u8) -> Self {
        FlopChoice {
            per_octahedron: xi.octahedra.iter().map(|o| (o.center.clone(), axis)).collect(),
        }
    }

    /// From axes listed in the order of `xi.octahedra`.
    pub fn from_vector(xi: &Xi, axes: &[u8]) -> Result<Self, ArError> {
        if axes.len() != xi.octahedra.len() {
            return Err(ArError::Input(format!(
                "{} axes given for {} octahedra",
                axes.len(),
                xi.octahedra.len()
            )));
        }
        Ok(FlopChoice {
            per_octahedron: xi.octahedra.iter().zip(axes).map(|(o, &k)| (o.center.clone(), k)).collect(),
        })
    }

    pub fn to_vector(&self, xi: &Xi) -> Vec<u8> {
        xi.octahedra.iter().map(|o| self.per_octahedron[&o.center]).collect()
    }

    /// Every choice vector for `xi`, in lexicographic order.
    pub fn all(xi: &Xi) -> Vec<FlopChoice> {
        if xi.octahedra.is_empty() {
            return vec![FlopChoice {
                per_octahedron: BTreeMap::new(),
            }];
        }
        (0..xi.octahedra.len())
            .map(|_| 1u8..=3)
            .multi_cartesian_product()
            .map(|v| FlopChoice::from_vector(xi, &v).expect("length matches"))
            .collect()
    }

    fn check(&self, xi: &Xi) -> Result<(), ArError> {
        if self.per_octahedron.len() != xi.octahedra.len() {
            return Err(ArError::Input("choice must give one axis per octahedron".into()));
        }
        for o in &xi.octahedra {
            match self.per_octahedron.get(&o.center) {
                Some(1..=3) => {}
                Some(k) => return Err(ArError::Input(format!("axis {k} is not in 1..=3"))),
                None => return Err(ArError::Input(format!("no axis for center {:?}", o.center))),
            }
        }
        Ok(())
    }
}

/// The four simplices of ◇(a) around the diagonal P = a + e_k + e_4,
/// P̄ = a + e_i + e_j, {i, j, k} = {1, 2, 3}. The equator is walked as
/// v_ki, v_kj, v_j4, v_i4 (all translated by a).
pub fn flop_simplices(a: &[i64], axis: u8) -> Vec<[Vec<i64>; 4]> {
    let k = axis as usize - 1;
    let others: Vec<usize> = (0..3).filter(|&x| x != k).collect();
    let (i, j) = (others[0], others[1]);
    let p = oct_vertex(a, k, 3);
    let pbar = oct_vertex(a, i, j);
    let eq = [oct_vertex(a, k, i), oct_vertex(a, k, j), oct_vertex(a, j, 3), oct_vertex(a, i, 3)];
    (0..4)
        .map(|t| [p.clone(), pbar.clone(), eq[t].clone(), eq[(t + 1) % 4].clone()])
        .collect()
}

/// A crepant resolution, certified smooth, crepant and with χ = (r+1)³.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub decomposition: Decomposition,
    pub choice: FlopChoice,
    pub source_group: ArGroup,
    pub labels: Vec<CellLabel>,
    pub slot_orders: Vec<Vec<usize>>,
    xi: Xi,
}

fn cut(table: &VertexTable, o: &Octahedron, axis: u8) -> Vec<(CellLabel, Vec<usize>)> {
    flop_simplices(&o.a, axis)
        .into_iter()
        .enumerate()
        .map(|(t, s)| {
            (
                CellLabel::Flop {
                    a: o.a.clone(),
                    axis,
                    t,
                },
                s.iter().map(|y| table.id(y)).collect(),
            )
        })
        .collect()
}

impl Resolution {
    /// Cut every octahedron of Ξ along its chosen diagonal and certify.
    pub fn resolve(xi: &Xi, choice: &FlopChoice) -> Result<Self, ArError> {
        choice.check(xi)?;
        let table = rebuild_table(&xi.decomposition);
        let mut cells = Vec::new();
        let mut labels = Vec::new();
        let mut slots = Vec::new();
        for (c, label) in xi.decomposition.cells().iter().zip(&xi.labels) {
            match label {
                CellLabel::Octahedron { .. } => {}
                CellLabel::Hypersimplex => {
                    return Err(ArError::Unsupported {
                        r: xi.group.r,
                        n: xi.group.n,
                    })
                }
                _ => {
                    cells.push(c.clone());
                    slots.push(slot_order(&table, label, None).expect("simplex"));
                    labels.push(label.clone());
                }
            }
        }
        for o in &xi.octahedra {
            for (label, order) in cut(&table, o, choice.per_octahedron[&o.center]) {
                cells.push(order.clone());
                slots.push(order);
                labels.push(label);
            }
        }
        let decomposition = xi.decomposition.with_cells(cells)?;
        let res = Resolution {
            decomposition,
            choice: choice.clone(),
            source_group: xi.group,
            labels,
            slot_orders: slots,
            xi: xi.clone(),
        };
        res.certify()?;
        Ok(res)
    }

    fn certify(&self) -> Result<(), ArError> {
        let d = &self.decomposition;
        d.validate()?;
        let (smooth, bad) = d.is_smooth();
        if !smooth {
            return Err(ArError::Structure(format!("cells {bad:?} are not unimodular")));
        }
        let (crepant, bad) = d.is_crepant();
        if !crepant {
            return Err(ArError::Structure(format!("vertices {bad:?} have weight > 1")));
        }
        let want = (self.source_group.r + 1).pow(self.source_group.n as u32 - 1) as usize;
        if d.euler_number() != want {
            return Err(ArError::Structure(format!(
                "Euler number {} differs from |G| = {want}",
                d.euler_number()
            )));
        }
        Ok(())
    }

    pub fn xi(&self) -> &Xi {
        &self.xi
    }

    pub fn choice_vector(&self) -> Vec<u8> {
        self.choice.to_vector(&self.xi)
    }

    /// Swap the diagonal of the octahedron centered at `center` to `new_axis`.
    pub fn flop(&self, center: &[i64], new_axis: u8) -> Result<Resolution, ArError> {
        let current = *self
            .choice
            .per_octahedron
            .get(center)
            .ok_or_else(|| ArError::Input(format!("{center:?} is not an octahedron center")))?;
        if current == new_axis {
            return Err(ArError::Input(format!("axis {new_axis} is already in place")));
        }
        let mut choice = self.choice.clone();
        choice.per_octahedron.insert(center.to_vec(), new_axis);
        Resolution::resolve(&self.xi, &choice)
    }

    pub fn chart(&self, cell: usize) -> Result<ChartDescriptor, ArError> {
        Ok(self.decomposition.chart_basis_ordered(cell, &self.slot_orders[cell])?)
    }

    pub fn to_json(&self) -> Result<ResolutionJson, ArError> {
        Ok(ResolutionJson {
            decomposition: DecompositionJson::from_decomposition(&self.decomposition)?,
            choice_vector: self.choice_vector(),
        })
    }

    pub fn to_json_string(&self) -> Result<String, ArError> {
        serde_json::to_string_pretty(&self.to_json()?).map_err(|e| ArError::Input(e.to_string()))
    }

    /// Rebuild from JSON: the group is read off n and the denominator 2(r+1),
    /// the resolution recomputed from the choice vector and compared cell by cell.
    pub fn from_json_str(s: &str) -> Result<Resolution, ArError> {
        let j: ResolutionJson = serde_json::from_str(s).map_err(|e| ArError::Input(e.to_string()))?;
        let d = j.decomposition.to_decomposition()?;
        let den = d.denominator();
        if den % 2 != 0 {
            return Err(ArError::Input(format!("denominator {den} is not 2(r+1)")));
        }
        let g = ArGroup::new(den / 2 - 1, d.n())?;
        let xi = build_xi(g)?;
        let choice = FlopChoice::from_vector(&xi, &j.choice_vector)?;
        let res = Resolution::resolve(&xi, &choice)?;
        let mut ours = res.decomposition.cells().to_vec();
        let mut theirs = d.cells().to_vec();
        ours.sort();
        theirs.sort();
        if ours != theirs || res.decomposition.vertices() != d.vertices() {
            return Err(ArError::Input("cells disagree with the choice vector".into()));
        }
        Ok(res)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ResolutionJson {
    #[serde(flatten)]
    pub decomposition: DecompositionJson,
    pub choice_vector: Vec<u8>,
}
