//! The representation **3** of 𝔄₄ and its character table.

use serde::Serialize;
use symbolic_core::{Cyclotomic, RingRef, Scalar, WPoly};

use crate::A4Error;

pub type Mat3 = [[i64; 3]; 3];

pub const IDENTITY: Mat3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

/// Images of (12)(34), (13)(24), (123).
pub const GENERATORS: [Mat3; 3] = [
    [[-1, 0, 0], [0, -1, 0], [0, 0, 1]],
    [[-1, 0, 0], [0, 1, 0], [0, 0, -1]],
    [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
];

pub const GENERATOR_NAMES: [&str; 3] = ["(12)(34)", "(13)(24)", "(123)"];

/// Classes in table order, with their sizes.
pub const CLASS_NAMES: [&str; 4] = ["e", "(12)(34)", "(123)", "(132)"];
pub const CLASS_SIZES: [usize; 4] = [1, 3, 4, 4];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Irrep {
    One,
    OneOmega,
    OneOmegaBar,
    Three,
}

impl Irrep {
    pub const ALL: [Irrep; 4] = [Irrep::One, Irrep::OneOmega, Irrep::OneOmegaBar, Irrep::Three];

    pub fn name(self) -> &'static str {
        match self {
            Irrep::One => "1",
            Irrep::OneOmega => "1_w",
            Irrep::OneOmegaBar => "1_wbar",
            Irrep::Three => "3",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Irrep::Three => 3,
            _ => 1,
        }
    }

    /// Values on e, (12)(34), (123), (132).
    pub fn character(self) -> [Cyclotomic; 4] {
        let c = |n: i64| Cyclotomic::from_ints(n, 0);
        match self {
            Irrep::One => [c(1), c(1), c(1), c(1)],
            Irrep::OneOmega => [c(1), c(1), Cyclotomic::w(), Cyclotomic::w2()],
            Irrep::OneOmegaBar => [c(1), c(1), Cyclotomic::w2(), Cyclotomic::w()],
            Irrep::Three => [c(3), c(-1), c(0), c(0)],
        }
    }
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat_pow(a: &Mat3, k: u32) -> Mat3 {
    (0..k).fold(IDENTITY, |acc, _| mat_mul(&acc, a))
}

pub fn det3(a: &Mat3) -> i64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Signed permutation matrices: the inverse is the transpose.
fn inverse(a: &Mat3) -> Mat3 {
    let mut t = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            t[i][j] = a[j][i];
        }
    }
    t
}

pub fn trace(a: &Mat3) -> i64 {
    a[0][0] + a[1][1] + a[2][2]
}

#[derive(Clone, Debug)]
pub struct GroupRepresentation {
    pub generator_matrices: [Mat3; 3],
    /// all 12 elements, identity first
    pub elements: Vec<Mat3>,
}

impl GroupRepresentation {
    pub fn new() -> Self {
        let mut elements = vec![IDENTITY];
        let mut i = 0;
        while i < elements.len() {
            for g in &GENERATORS {
                let m = mat_mul(&elements[i], g);
                if !elements.contains(&m) {
                    elements.push(m);
                }
            }
            i += 1;
        }
        GroupRepresentation {
            generator_matrices: GENERATORS,
            elements,
        }
    }

    /// Index into [`CLASS_NAMES`]. The (123) class is the one holding the third
    /// generator; (132) holds its square.
    pub fn class_of(&self, m: &Mat3) -> usize {
        if *m == IDENTITY {
            return 0;
        }
        if mat_mul(m, m) == IDENTITY {
            return 1;
        }
        let c = GENERATORS[2];
        let conj_of_c = self.elements.iter().any(|g| mat_mul(&mat_mul(g, &c), &inverse(g)) == *m);
        if conj_of_c {
            2
        } else {
            3
        }
    }

    /// Orders 2, 2, 3; the two involutions commute; conjugation by (123)
    /// permutes the three involutions; 12 elements; every det = 1.
    pub fn check_presentation(&self) -> Result<(), String> {
        let [a, b, c] = self.generator_matrices;
        let checks = [
            ("a^2 = 1", mat_pow(&a, 2) == IDENTITY && a != IDENTITY),
            ("b^2 = 1", mat_pow(&b, 2) == IDENTITY && b != IDENTITY),
            ("c^3 = 1", mat_pow(&c, 3) == IDENTITY && c != IDENTITY),
            ("ab = ba", mat_mul(&a, &b) == mat_mul(&b, &a)),
            ("c a c^-1 = b", mat_mul(&mat_mul(&c, &a), &inverse(&c)) == b),
            ("c b c^-1 = ab", mat_mul(&mat_mul(&c, &b), &inverse(&c)) == mat_mul(&a, &b)),
            ("|G| = 12", self.elements.len() == 12),
            ("det = 1", self.elements.iter().all(|m| det3(m) == 1)),
        ];
        match checks.iter().find(|(_, ok)| !ok) {
            Some((name, _)) => Err(format!("relation {name} fails")),
            None => Ok(()),
        }
    }

    /// ⟨χ_i, χ_j⟩ over the twelve elements, and the trace of **3** against its row.
    pub fn check_characters(&self) -> Result<(), String> {
        let classes: Vec<usize> = self.elements.iter().map(|m| self.class_of(m)).collect();
        for (k, size) in CLASS_SIZES.iter().enumerate() {
            if classes.iter().filter(|&&c| c == k).count() != *size {
                return Err(format!("class {} has the wrong size", CLASS_NAMES[k]));
            }
        }
        for (m, &k) in self.elements.iter().zip(&classes) {
            if Irrep::Three.character()[k] != Cyclotomic::from_ints(trace(m), 0) {
                return Err(format!("trace of {m:?} disagrees with the 3 row"));
            }
        }
        for x in Irrep::ALL {
            for y in Irrep::ALL {
                let (cx, cy) = (x.character(), y.character());
                let s = classes
                    .iter()
                    .fold(Cyclotomic::zero(), |acc, &k| acc + cx[k].clone() * cy[k].conj());
                let want = Cyclotomic::from_ints(if x == y { 12 } else { 0 }, 0);
                if s != want {
                    return Err(format!("<{}, {}> = {s}", x.name(), y.name()));
                }
            }
        }
        Ok(())
    }
}

impl Default for GroupRepresentation {
    fn default() -> Self {
        GroupRepresentation::new()
    }
}

/// P ↦ P(AZ) on the first three variables of `p`'s ring.
pub fn act(p: &WPoly, a: &Mat3) -> Result<WPoly, A4Error> {
    let ring: RingRef = p.ring().clone();
    let mut images: Vec<WPoly> = (0..ring.nvars()).map(|i| WPoly::var(&ring, i)).collect();
    for (i, row) in a.iter().enumerate() {
        let mut im = WPoly::zero(&ring);
        for (j, &x) in row.iter().enumerate() {
            if x != 0 {
                im = im + WPoly::var(&ring, j).scale(&Cyclotomic::from_ints(x, 0));
            }
        }
        images[i] = im;
    }
    Ok(p.substitute(&images, &ring)?)
}
