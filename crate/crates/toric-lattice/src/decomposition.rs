use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use itertools::Itertools;
use symbolic_core::linalg;
use symbolic_core::{int, Rational, Scalar};

use crate::lattice::DiagonalGroupLattice;
use crate::ToricError;

/// Sorted vertex ids of a cell.
pub type Cell = Vec<usize>;

/// Faces of every maximal cell, plus the reverse map face → cells.
#[derive(Clone, Debug)]
pub struct FaceIndex {
    /// per maximal cell: all faces (global vertex ids), the cell itself included
    pub cell_faces: Vec<Vec<Cell>>,
    /// by dimension: face → maximal cells containing it
    pub by_dim: Vec<BTreeMap<Cell, Vec<usize>>>,
}

/// Polytope decomposition of the standard simplex, points stored as
/// integer vectors over one common denominator.
#[derive(Clone, Debug)]
pub struct Decomposition {
    lattice: DiagonalGroupLattice,
    den: i64,
    vertices: Vec<Vec<i64>>,
    cells: Vec<Cell>,
    weights: Vec<i64>,
    faces: OnceLock<FaceIndex>,
}

impl PartialEq for Decomposition {
    fn eq(&self, o: &Self) -> bool {
        self.lattice == o.lattice && self.den == o.den && self.vertices == o.vertices && self.cells == o.cells
    }
}

impl Eq for Decomposition {}

pub(crate) fn to_rational(y: &[i64], den: i64) -> Vec<Rational> {
    y.iter().map(|&x| symbolic_core::rat(x, den)).collect()
}

impl Decomposition {
    pub fn new(
        lattice: DiagonalGroupLattice,
        den: i64,
        vertices: Vec<Vec<i64>>,
        cells: Vec<Cell>,
    ) -> Result<Self, ToricError> {
        let n = lattice.n();
        if den <= 0 {
            return Err(ToricError::Input("point denominator must be positive".into()));
        }
        for v in &vertices {
            if v.len() != n || v.iter().any(|&x| x < 0) || v.iter().sum::<i64>() != den {
                return Err(ToricError::Input(format!("{v:?} is not a point of the simplex over {den}")));
            }
        }
        let mut cells = cells;
        for c in &mut cells {
            c.sort_unstable();
            c.dedup();
            if c.iter().any(|&i| i >= vertices.len()) {
                return Err(ToricError::Input("cell refers to a missing vertex".into()));
            }
            if c.len() < n {
                return Err(ToricError::Input(format!("cell {c:?} has fewer than {n} vertices")));
            }
        }
        let weights = vertices.iter().map(|v| lattice.weight(v, den)).collect();
        Ok(Decomposition {
            lattice,
            den,
            vertices,
            cells,
            weights,
            faces: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.lattice.n()
    }

    pub fn lattice(&self) -> &DiagonalGroupLattice {
        &self.lattice
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn vertex_index(&self, y: &[i64]) -> Option<usize> {
        self.vertices.iter().position(|v| v == y)
    }

    pub fn cell_index(&self, cell: &[usize]) -> Option<usize> {
        let mut c = cell.to_vec();
        c.sort_unstable();
        self.cells.iter().position(|x| *x == c)
    }

    pub fn point(&self, v: usize) -> Vec<Rational> {
        to_rational(&self.vertices[v], self.den)
    }

    /// m_v: least positive integer with m_v·v ∈ N.
    pub fn weight(&self, v: usize) -> i64 {
        self.weights[v]
    }

    pub fn scaled_vertex(&self, v: usize) -> Vec<Rational> {
        let m = int(self.weights[v]);
        self.point(v).into_iter().map(|x| x * &m).collect()
    }

    pub fn euler_number(&self) -> usize {
        self.cells.len()
    }

    /// Λ(0): vertices used by some maximal cell. The vertex table may hold more.
    pub fn used_vertices(&self) -> Vec<usize> {
        let s: BTreeSet<usize> = self.cells.iter().flatten().copied().collect();
        s.into_iter().collect()
    }

    /// (crepant, vertices of weight > 1)
    pub fn is_crepant(&self) -> (bool, Vec<usize>) {
        let bad: Vec<usize> = self.used_vertices().into_iter().filter(|&v| self.weights[v] > 1).collect();
        (bad.is_empty(), bad)
    }

    /// Vertices with m_v > 1 and their coefficient m_v − 1 in K.
    pub fn canonical_divisor(&self) -> Vec<(usize, i64)> {
        self.used_vertices()
            .into_iter()
            .filter(|&v| self.weights[v] > 1)
            .map(|v| (v, self.weights[v] - 1))
            .collect()
    }

    pub fn is_simplicial(&self, c: usize) -> bool {
        let cell = &self.cells[c];
        cell.len() == self.n() && linalg::rank(&cell.iter().map(|&v| self.point(v)).collect()) == self.n()
    }

    /// det of the scaled vertices (ids in the given order) times the index:
    /// ±1 exactly when they form an N-basis.
    pub fn normalized_det(&self, order: &[usize]) -> Rational {
        let m: Vec<Vec<Rational>> = order.iter().map(|&v| self.scaled_vertex(v)).collect();
        let d = linalg::det(&m).expect("square");
        d * int(self.lattice.index() as i64)
    }

    pub fn is_unimodular(&self, c: usize) -> bool {
        if !self.is_simplicial(c) {
            return false;
        }
        let d = self.normalized_det(&self.cells[c]);
        d == int(1) || d == int(-1)
    }

    /// (smooth, offending maximal cells)
    pub fn is_smooth(&self) -> (bool, Vec<usize>) {
        let bad: Vec<usize> = (0..self.cells.len()).filter(|&c| !self.is_unimodular(c)).collect();
        (bad.is_empty(), bad)
    }

    /// No two of {smooth, crepant, χ = |G|} may hold without the third.
    pub fn two_of_three_holds(&self) -> bool {
        let s = self.is_smooth().0;
        let k = self.is_crepant().0;
        let e = self.euler_number() == self.lattice.index();
        let count = [s, k, e].iter().filter(|&&b| b).count();
        count != 2
    }

    pub fn face_index(&self) -> &FaceIndex {
        self.faces.get_or_init(|| {
            let n = self.n();
            let mut by_dim: Vec<BTreeMap<Cell, Vec<usize>>> = vec![BTreeMap::new(); n];
            let mut cell_faces = Vec::with_capacity(self.cells.len());
            for (ci, cell) in self.cells.iter().enumerate() {
                let pts: Vec<Vec<Rational>> = cell.iter().map(|&v| self.point(v)).collect();
                let local = polytope_faces(&pts);
                let global: Vec<Cell> = local
                    .iter()
                    .map(|f| f.iter().map(|&i| cell[i]).collect())
                    .collect();
                for f in &global {
                    let dim = self.face_dim(f);
                    by_dim[dim].entry(f.clone()).or_default().push(ci);
                }
                cell_faces.push(global);
            }
            FaceIndex { cell_faces, by_dim }
        })
    }

    pub fn face_dim(&self, face: &[usize]) -> usize {
        linalg::rank(&face.iter().map(|&v| self.point(v)).collect()) - 1
    }

    /// Faces of dimension `dim` (Λ(dim)).
    pub fn faces_of_dim(&self, dim: usize) -> Vec<Cell> {
        self.face_index().by_dim[dim].keys().cloned().collect()
    }

    /// Maximal-cell pairs sharing a codimension-one face.
    pub fn adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = BTreeSet::new();
        for cells in self.face_index().by_dim[n - 2].values() {
            for (a, b) in cells.iter().tuple_combinations() {
                out.insert((*a.min(b), *a.max(b)));
            }
        }
        out.into_iter().collect()
    }

    /// Maximal cells containing `v`.
    pub fn star(&self, v: usize) -> Vec<usize> {
        (0..self.cells.len()).filter(|&c| self.cells[c].contains(&v)).collect()
    }

    /// Pulling triangulation of a maximal cell (simplices as vertex-id lists).
    pub fn triangulate(&self, c: usize) -> Vec<Cell> {
        let faces = &self.face_index().cell_faces[c];
        let dims: BTreeMap<&Cell, usize> = faces.iter().map(|f| (f, self.face_dim(f))).collect();
        fn pull(face: &Cell, faces: &[Cell], dims: &BTreeMap<&Cell, usize>) -> Vec<Cell> {
            let d = dims[face];
            if face.len() == d + 1 {
                return vec![face.clone()];
            }
            let apex = face[0];
            let mut out = Vec::new();
            for g in faces {
                if dims[g] + 1 == d && !g.contains(&apex) && g.iter().all(|v| face.contains(v)) {
                    for mut s in pull(g, faces, dims) {
                        s.push(apex);
                        s.sort_unstable();
                        out.push(s);
                    }
                }
            }
            out
        }
        let full = self.cells[c].clone();
        pull(&full, faces, &dims)
    }

    /// Euclidean volume of the cone over the cell, normalized so that Δ has volume 1.
    pub fn cell_volume(&self, c: usize) -> Rational {
        self.triangulate(c)
            .iter()
            .map(|s| {
                let m: Vec<Vec<Rational>> = s.iter().map(|&v| self.point(v)).collect();
                let d = linalg::det(&m).expect("square");
                if d < int(0) {
                    -d
                } else {
                    d
                }
            })
            .fold(int(0), |a, b| a + b)
    }

    /// Cover check: volumes sum to that of Δ, and every codimension-one face
    /// lies in one cell on ∂Δ or exactly two cells inside.
    pub fn validate(&self) -> Result<(), ToricError> {
        let n = self.n();
        for c in 0..self.cells.len() {
            let pts: Vec<Vec<Rational>> = self.cells[c].iter().map(|&v| self.point(v)).collect();
            if linalg::rank(&pts) != n {
                return Err(ToricError::Structure(format!("cell {c} is not full-dimensional")));
            }
        }
        let total = (0..self.cells.len()).map(|c| self.cell_volume(c)).fold(int(0), |a, b| a + b);
        if total != int(1) {
            return Err(ToricError::Structure(format!("cell volumes sum to {total}, not 1")));
        }
        for (face, cells) in &self.face_index().by_dim[n - 2] {
            let on_boundary = (0..n).any(|k| face.iter().all(|&v| self.vertices[v][k] == 0));
            let expected = if on_boundary { 1 } else { 2 };
            if cells.len() != expected {
                return Err(ToricError::Structure(format!(
                    "face {face:?} lies in {} cells, expected {expected}",
                    cells.len()
                )));
            }
        }
        Ok(())
    }

    /// Same vertices, different maximal cells.
    pub fn with_cells(&self, cells: Vec<Cell>) -> Result<Self, ToricError> {
        Decomposition::new(self.lattice.clone(), self.den, self.vertices.clone(), cells)
    }
}

/// All faces of the polytope with the given vertices (as index sets), the
/// polytope itself included. Facets come from supporting hyperplanes of the
/// cone over the points, lower faces from intersections of facets.
pub fn polytope_faces(pts: &[Vec<Rational>]) -> Vec<Vec<usize>> {
    let n = pts[0].len();
    let k = pts.len();
    let mut facets: BTreeSet<Vec<usize>> = BTreeSet::new();
    if k == n {
        // simplex: every proper subset is a face
        for size in 1..k {
            for s in (0..k).combinations(size) {
                facets.insert(s);
            }
        }
        let mut out: Vec<Vec<usize>> = facets.into_iter().collect();
        out.push((0..k).collect());
        return out;
    }
    for sub in (0..k).combinations(n - 1) {
        let m: Vec<Vec<Rational>> = sub.iter().map(|&i| pts[i].clone()).collect();
        let ns = linalg::nullspace(&m);
        if ns.len() != 1 {
            continue;
        }
        let h = &ns[0];
        let vals: Vec<Rational> = pts
            .iter()
            .map(|p| p.iter().zip(h).fold(int(0), |a, (x, y)| a + x * y))
            .collect();
        let pos = vals.iter().any(|v| *v > int(0));
        let neg = vals.iter().any(|v| *v < int(0));
        if pos && neg {
            continue;
        }
        facets.insert((0..k).filter(|&i| vals[i].is_zero()).collect());
    }
    let mut all: BTreeSet<Vec<usize>> = facets.clone();
    loop {
        let cur: Vec<Vec<usize>> = all.iter().cloned().collect();
        let mut added = false;
        for (a, b) in cur.iter().tuple_combinations() {
            let i: Vec<usize> = a.iter().filter(|x| b.contains(x)).copied().collect();
            if !i.is_empty() && all.insert(i) {
                added = true;
            }
        }
        if !added {
            break;
        }
    }
    let mut out: Vec<Vec<usize>> = all.into_iter().collect();
    out.push((0..k).collect());
    out
}
