//! The four affine charts of Hilb^{𝔄₄}(ℂ³) centred at the central ideals.
//!
//! Each chart is stored as text: the generators of J, the bound parameters as
//! polynomials in the three free ones, the free ones as rational functions of
//! (η₁, η₂, η₃, ξ), the volume constant, and the membership identities used to
//! derive them. A reading that fails is reported; where a correction is
//! recorded it is tried next and the outcome is `Corrected`.

use serde::Serialize;
use symbolic_core::{
    jacobian_determinant, parse_poly, Cyclotomic, Env, MonomialOrder, Poly, RationalFunction, Ring, RingRef,
    SampleRng, Scalar, WPoly,
};

use crate::central::central_ideal;
use crate::coinvariants::piece_env;
use crate::invariants::{z_ring, InvariantSet, EQ_TRI_RHS};
use crate::quotient::{GroebnerIdeal, Quotient};
use crate::{A4Error, Check, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ChartName {
    X0,
    X0Prime,
    XInf,
    XInfPrime,
}

impl ChartName {
    pub const ALL: [ChartName; 4] = [ChartName::X0, ChartName::X0Prime, ChartName::XInf, ChartName::XInfPrime];

    pub fn id(self) -> &'static str {
        match self {
            ChartName::X0 => "x0",
            ChartName::X0Prime => "x0'",
            ChartName::XInf => "xinf",
            ChartName::XInfPrime => "xinf'",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let t = s.trim().replace('_', "").to_lowercase();
        let t = t.strip_suffix("prime").map(|x| format!("{x}'")).unwrap_or(t);
        ChartName::ALL.into_iter().find(|c| c.id() == t || c.id().replace('\'', "p") == t)
    }

    /// ω ↦ ω² exchanges x₀ ↔ x₀′ and x_∞ ↔ x_∞′.
    pub fn conjugate(self) -> Self {
        match self {
            ChartName::X0 => ChartName::X0Prime,
            ChartName::X0Prime => ChartName::X0,
            ChartName::XInf => ChartName::XInfPrime,
            ChartName::XInfPrime => ChartName::XInf,
        }
    }

    pub fn is_primed(self) -> bool {
        matches!(self, ChartName::X0Prime | ChartName::XInfPrime)
    }
}

/// A displayed expression, with the reading to try when it fails.
#[derive(Clone, Copy, Debug)]
pub struct Transcribed<T> {
    pub literal: T,
    /// (replacement, what was changed)
    pub corrected: Option<(T, &'static str)>,
}

fn lit<T>(literal: T) -> Transcribed<T> {
    Transcribed { literal, corrected: None }
}

fn fix<T>(literal: T, corrected: T, note: &'static str) -> Transcribed<T> {
    Transcribed {
        literal,
        corrected: Some((corrected, note)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum IdentityKind {
    /// polynomial identity with every parameter symbolic
    Exact,
    /// lhs − rhs ∈ J, checked at sampled chart points
    ModJ,
    /// lhs = rhs once the bound parameters are solved
    OnChart,
}

#[derive(Clone, Copy, Debug)]
pub struct ChartIdentity {
    pub name: &'static str,
    pub kind: IdentityKind,
    /// (lhs, rhs)
    pub sides: Transcribed<(&'static str, &'static str)>,
}

#[derive(Clone, Debug)]
pub struct ChartA4 {
    pub name: ChartName,
    pub params: [&'static str; 4],
    /// indices into `params`
    pub free: [usize; 3],
    /// (label, text); J also holds Y_i − η_i and X − ξ
    pub generators: Vec<(&'static str, &'static str)>,
    /// bound parameter, η₁, η₂, η₃, ξ in the free ones
    pub solved: Vec<(&'static str, Transcribed<&'static str>)>,
    /// parameter as (numerator, denominator) in η₁, η₂, η₃, ξ
    pub inverse: Vec<(&'static str, Transcribed<(&'static str, &'static str)>)>,
    /// c with dZ₁∧dZ₂∧dZ₃ = c·(wedge of the free differentials)
    pub volume: &'static str,
    /// empty for the primed charts, whose identities are conjugates
    pub identities: Vec<ChartIdentity>,
}

const ETA: [&str; 4] = ["eta1", "eta2", "eta3", "xi"];

impl ChartA4 {
    pub fn ring(&self) -> RingRef {
        let mut names = vec!["Z1", "Z2", "Z3"];
        names.extend(self.params);
        names.extend(ETA);
        Ring::new(&names)
    }

    pub fn free_names(&self) -> [&'static str; 3] {
        self.free.map(|i| self.params[i])
    }

    pub fn central_ideal(&self) -> &'static str {
        self.name.id()
    }
}

const XINF_DEN: &str = "(w - w^2)*xi - eta1*eta3 + 9*eta2^2";
const XINFP_DEN: &str = "(w^2 - w)*xi - eta1*eta3 + 9*eta2^2";
const X0_DEN: &str = "(w^2 - w)*xi + eta1*eta3 - 9*eta2^2";
const X0P_DEN: &str = "(w - w^2)*xi + eta1*eta3 - 9*eta2^2";

fn x_inf() -> ChartA4 {
    ChartA4 {
        name: ChartName::XInf,
        params: ["v0", "v1", "v2", "v3"],
        free: [0, 1, 2],
        generators: vec![
            ("g0", "fb^2 - v0*f"),
            ("p1", "f*Z1 - v1*fb*Z1 - v2*Z2*Z3 - v3*Z1"),
            ("p2", "f*w^2*Z2 - v1*fb*w*Z2 - v2*Z3*Z1 - v3*Z2"),
            ("p3", "f*w*Z3 - v1*fb*w^2*Z3 - v2*Z1*Z2 - v3*Z3"),
        ],
        solved: vec![
            ("v3", lit("1/3*v2^2 - v0*v1^2")),
            ("eta1", lit("1/3*v2^2 + v0*v1 - v0*v1^2")),
            ("eta2", lit("1/27*v2*(3*v0 - 3*v0*v1 - v2^2 + 3*v0*v1^2)")),
            ("eta3", lit("1/27*(3*v0*v1^2 - v2^2)*(3*v0*v1^2 - 3*v0*v1 - v2^2 + 3*v0)")),
            ("xi", lit("(w - w^2)/81*v0*(v1 + 1)*(3*v0*v1^2 + 3*v0 - 3*v0*v1 - v2^2)*(3*v0*v1^3 - v2^2 - v1*v2^2)")),
        ],
        inverse: vec![
            ("v0", lit(("3*(w - w^2)*xi - 9*eta1*eta3 + 27*eta2^2 + 2*eta1^3", "2*(eta1^2 - 3*eta3)"))),
            ("v1", lit(("(w - w^2)*xi + eta1*eta3 - 9*eta2^2", XINF_DEN))),
            ("v2", lit(("6*eta2*(eta1^2 - 3*eta3)", XINF_DEN))),
            ("v3", lit(("-2*eta3*(eta1^2 - 3*eta3)", XINF_DEN))),
        ],
        volume: "(w - w^2)/36",
        identities: vec![
            ChartIdentity {
                name: "f^2 - (v1 eta1 + v3) fb",
                kind: IdentityKind::Exact,
                sides: lit(("f^2 - (v1*eta1 + v3)*fb", "Z1*p1 + w^2*Z2*p2 + w*Z3*p3 + v1*(Y1 - eta1)*fb")),
            },
            ChartIdentity {
                name: "(eta1 - v3 - v0 v1) f",
                kind: IdentityKind::Exact,
                sides: lit((
                    "(eta1 - v3 - v0*v1)*f",
                    "Z1*p1 + w*Z2*p2 + w^2*Z3*p3 + v1*(fb^2 - v0*f) - (Y1 - eta1)*f",
                )),
            },
            ChartIdentity {
                name: "3 Y2 f - v2 (Z2^2Z3^2 + w Z3^2Z1^2 + w^2 Z1^2Z2^2)",
                kind: IdentityKind::Exact,
                sides: lit((
                    "3*Y2*f - v2*(Z2^2*Z3^2 + w*Z3^2*Z1^2 + w^2*Z1^2*Z2^2)",
                    "Z2*Z3*p1 + w*Z3*Z1*p2 + w^2*Z1*Z2*p3",
                )),
            },
            ChartIdentity {
                name: "fb^2 - Y1 f",
                kind: IdentityKind::Exact,
                sides: lit(("fb^2 - Y1*f", "3*(Z2^2*Z3^2 + w*Z3^2*Z1^2 + w^2*Z1^2*Z2^2)")),
            },
            ChartIdentity {
                name: "(3 eta3 - eta1^2 - v0 (v3 + v1 eta1)) f in J",
                kind: IdentityKind::ModJ,
                sides: fix(
                    ("(3*eta3 - eta1^2 - v0*(v3 + v1*eta1))*f", "0"),
                    ("(eta1^2 - 3*eta3 - v0*(v3 + v1*eta1))*f", "0"),
                    "f fb = eta1^2 - 3 eta3 enters with the opposite sign",
                ),
            },
            ChartIdentity {
                name: "f^3 - fb^3 = (v1 eta1 + v3 - v0) f fb mod J",
                kind: IdentityKind::ModJ,
                sides: lit(("f^3 - fb^3", "(v1*eta1 + v3 - v0)*f*fb")),
            },
            ChartIdentity {
                name: "3(w^2 - w) xi = f^3 - fb^3 mod J",
                kind: IdentityKind::ModJ,
                sides: lit(("3*(w^2 - w)*xi", "f^3 - fb^3")),
            },
            ChartIdentity {
                name: "v2 p3 - (w - w^2)((w^2 + w v1) Z1 p2 - (w + w^2 v1) Z2 p1) mod J",
                kind: IdentityKind::ModJ,
                sides: lit((
                    "v2*p3 - (w - w^2)*((w^2 + w*v1)*Z1*p2 - (w + w^2*v1)*Z2*p1)",
                    "v1*(9*eta2 + v0*v1*v2 + v2*v3 - v0*v2)*Z3 + (3*v1*eta1 + 3*v3 - 3*v1*v3 - v2^2)*Z1*Z2",
                )),
            },
            ChartIdentity {
                name: "eta1 - v3 - v0 v1 = 0",
                kind: IdentityKind::OnChart,
                sides: lit(("eta1 - v3 - v0*v1", "0")),
            },
            ChartIdentity {
                name: "3 eta3 - eta1^2 = v0 (v3 + v1 eta1)",
                kind: IdentityKind::OnChart,
                sides: fix(
                    ("3*eta3 - eta1^2", "v0*(v3 + v1*eta1)"),
                    ("eta1^2 - 3*eta3", "v0*(v3 + v1*eta1)"),
                    "left side negated",
                ),
            },
            ChartIdentity {
                name: "9 eta2 + v2 eta1 - v0 v2 = 0",
                kind: IdentityKind::OnChart,
                sides: lit(("9*eta2 + v2*eta1 - v0*v2", "0")),
            },
            ChartIdentity {
                name: "3(w^2 - w) xi = (v1 eta1 + v3 - v0)(eta1^2 - 3 eta3)",
                kind: IdentityKind::OnChart,
                sides: lit(("3*(w^2 - w)*xi", "(v1*eta1 + v3 - v0)*(eta1^2 - 3*eta3)")),
            },
            ChartIdentity {
                name: "3 v1 eta1 + 3 v3 - 3 v1 v3 - v2^2 = 0",
                kind: IdentityKind::OnChart,
                sides: lit(("3*v1*eta1 + 3*v3 - 3*v1*v3 - v2^2", "0")),
            },
            ChartIdentity {
                name: "v1 (9 eta2 + v0 v1 v2 + v2 v3 - v0 v2) = 0",
                kind: IdentityKind::OnChart,
                sides: lit(("v1*(9*eta2 + v0*v1*v2 + v2*v3 - v0*v2)", "0")),
            },
        ],
    }
}

fn x_inf_prime() -> ChartA4 {
    ChartA4 {
        name: ChartName::XInfPrime,
        params: ["v0p", "v1p", "v2p", "v3p"],
        free: [0, 1, 2],
        generators: vec![
            ("g0", "f^2 - v0p*fb"),
            ("p1", "fb*Z1 - v1p*f*Z1 - v2p*Z2*Z3 - v3p*Z1"),
            ("p2", "fb*w*Z2 - v1p*f*w^2*Z2 - v2p*Z3*Z1 - v3p*Z2"),
            ("p3", "fb*w^2*Z3 - v1p*f*w*Z3 - v2p*Z1*Z2 - v3p*Z3"),
        ],
        solved: vec![
            ("v3p", lit("1/3*v2p^2 - v0p*v1p^2")),
            ("eta1", lit("1/3*v2p^2 + v0p*v1p - v0p*v1p^2")),
            (
                "eta2",
                fix(
                    "1/27*v2*(3*v0p - 3*v0p*v1p - v2p^2 + 3*v0p*v1p^2)",
                    "1/27*v2p*(3*v0p - 3*v0p*v1p - v2p^2 + 3*v0p*v1p^2)",
                    "leading factor v2 read as v2'",
                ),
            ),
            ("eta3", lit("1/27*(3*v0p*v1p^2 - v2p^2)*(3*v0p*v1p^2 - 3*v0p*v1p - v2p^2 + 3*v0p)")),
            (
                "xi",
                lit("(w^2 - w)/81*v0p*(v1p + 1)*(3*v0p*v1p^2 + 3*v0p - 3*v0p*v1p - v2p^2)*(3*v0p*v1p^3 - v2p^2 - v1p*v2p^2)"),
            ),
        ],
        inverse: vec![
            ("v0p", lit(("3*(w^2 - w)*xi - 9*eta1*eta3 + 27*eta2^2 + 2*eta1^3", "2*(eta1^2 - 3*eta3)"))),
            ("v1p", lit(("(w^2 - w)*xi + eta1*eta3 - 9*eta2^2", XINFP_DEN))),
            ("v2p", lit(("6*eta2*(eta1^2 - 3*eta3)", XINFP_DEN))),
            ("v3p", lit(("-2*eta3*(eta1^2 - 3*eta3)", XINFP_DEN))),
        ],
        volume: "(w^2 - w)/36",
        identities: Vec::new(),
    }
}

fn x_zero() -> ChartA4 {
    let l_lhs = "(1 + u0*u2)*(1 - u0*eta1)*(Z1*q2 - Z2*q1 - u1*(w - w^2)*q3) \
        + 1/(2 + w)*(1 + u0*u2)*(-w^2*u2*Z3*(f - u0*fb^2) + u0*u2*Z3*(f^2 - u0*(eta1 - 3*eta3)*fb))";
    let l_fixed = "(1 + u0*u2)*(1 - u0*eta1)*(Z1*q2 - Z2*q1 - u1*(w - w^2)*q3) \
        + 1/(2 + w)*(1 + u0*u2)*(-w^2*u2*Z3*(f - u0*fb^2) + u0*u2*Z3*(f^2 - u0*(eta1^2 - 3*eta3)*fb))";
    let l_rhs = "(Z3*fb - Z3*w*eta1)*(1 - u0*eta1)*(eta1 + u2 + u0*u2^2 - 3*u0^2*u3^2)";
    let k = "(1 + u0*u2 + u0^2*u2^2 - 3*u0^3*u3^2)";
    ChartA4 {
        name: ChartName::X0,
        params: ["u0", "u1", "u2", "u3"],
        free: [0, 2, 3],
        generators: vec![
            ("g0", "f - u0*fb^2"),
            ("q1", "fb*Z2*Z3 - u1*fb*Z1 - u2*Z2*Z3 - u3*Z1"),
            ("q2", "fb*w*Z3*Z1 - u1*fb*w*Z2 - u2*Z3*Z1 - u3*Z2"),
            ("q3", "fb*w^2*Z1*Z2 - u1*fb*w^2*Z3 - u2*Z1*Z2 - u3*Z3"),
        ],
        solved: vec![
            ("u1", lit("-u0*u3")),
            ("eta1", lit("-u2 - u0*u2^2 + 3*u0^2*u3^2")),
            ("eta2", lit(leak(format!("1/3*u3*{k}")))),
            ("eta3", lit(leak(format!("1/3*(u2^2 - 3*u0*u3^2)*{k}")))),
            ("xi", lit(leak(format!("(w - w^2)/9*(-1 + u0*u2)*(3*u3^2 + u2^3 - 3*u0*u2*u3^2)*{k}")))),
        ],
        inverse: vec![
            (
                "u0",
                fix(
                    ("6*eta3 - 2*eta1^2", "3*(w^2 - w)*xi + 9*eta1*eta3 - 2*eta1^2 - 27*eta2^2"),
                    ("6*eta3 - 2*eta1^2", "3*(w^2 - w)*xi + 9*eta1*eta3 - 2*eta1^3 - 27*eta2^2"),
                    "eta1^2 in the denominator read as eta1^3",
                ),
            ),
            ("u1", lit(("eta2*(-6*eta3 + 2*eta1^2)", X0_DEN))),
            ("u2", lit(("-(w^2 - w)*xi*eta1 - 6*eta3^2 + 9*eta1*eta2^2 + eta1^2*eta3", X0_DEN))),
            ("u3", lit(("eta2*(3*(w^2 - w)*xi + 9*eta1*eta3 - 27*eta2^2 - 2*eta1^3)", X0_DEN))),
        ],
        volume: "(w - w^2)/12",
        identities: vec![
            ChartIdentity {
                name: "-(u1 + u0 u3) fb^2 = -u1 fb^2 - u3 f mod J",
                kind: IdentityKind::ModJ,
                sides: lit(("-(u1 + u0*u3)*fb^2", "-u1*fb^2 - u3*f")),
            },
            ChartIdentity {
                name: "-u1 fb^2 - u3 f = Z1 q1 + w Z2 q2 + w^2 Z3 q3 mod J",
                kind: IdentityKind::ModJ,
                sides: lit(("-u1*fb^2 - u3*f", "Z1*q1 + w*Z2*q2 + w^2*Z3*q3")),
            },
            ChartIdentity {
                name: "(3 eta2 - u1 eta1 - u3) fb = Z1 q1 + w^2 Z2 q2 + w Z3 q3 mod J",
                kind: IdentityKind::ModJ,
                sides: lit(("(3*eta2 - u1*eta1 - u3)*fb", "Z1*q1 + w^2*Z2*q2 + w*Z3*q3")),
            },
            ChartIdentity {
                name: "f^2 = u0 fb^2 f mod J",
                kind: IdentityKind::ModJ,
                sides: lit(("f^2", "u0*fb^2*f")),
            },
            ChartIdentity {
                name: "u0 fb^2 f = u0 (eta1^2 - 3 eta3) fb mod J",
                kind: IdentityKind::ModJ,
                sides: lit(("u0*fb^2*f", "u0*(eta1^2 - 3*eta3)*fb")),
            },
            ChartIdentity {
                name: "Z2Z3 q1 + w^2 Z3Z1 q2 + w Z1Z2 q3 mod J",
                kind: IdentityKind::ModJ,
                sides: lit((
                    "Z2*Z3*q1 + w^2*Z3*Z1*q2 + w*Z1*Z2*q3",
                    "(eta3 - 3*u1*eta2)*fb - u2*(Z2^2*Z3^2 + w^2*Z3^2*Z1^2 + w*Z1^2*Z2^2)",
                )),
            },
            ChartIdentity {
                name: "Z2^2Z3^2 + w^2 Z3^2Z1^2 + w Z1^2Z2^2 = (f^2 - eta1 fb)/3 mod J",
                kind: IdentityKind::ModJ,
                sides: lit(("Z2^2*Z3^2 + w^2*Z3^2*Z1^2 + w*Z1^2*Z2^2", "1/3*(f^2 - eta1*fb)")),
            },
            ChartIdentity {
                name: "(f^2 - eta1 fb)/3 = (u0 (eta1^2 - 3 eta3) - eta1) fb/3 mod J",
                kind: IdentityKind::ModJ,
                sides: lit(("1/3*(f^2 - eta1*fb)", "1/3*(u0*(eta1^2 - 3*eta3) - eta1)*fb")),
            },
            ChartIdentity {
                name: "u0 fb^2 f^2 - fb^3 = 3(w^2 - w) xi mod J",
                kind: IdentityKind::ModJ,
                sides: lit(("u0*fb^2*f^2 - fb^3", "3*(w^2 - w)*xi")),
            },
            ChartIdentity {
                name: "2 u0 (eta1^2 - 3 eta3)^2 - 2 fb^3 = 6(w^2 - w) xi mod J",
                kind: IdentityKind::ModJ,
                sides: lit(("2*u0*(eta1^2 - 3*eta3)^2 - 2*fb^3", "6*(w^2 - w)*xi")),
            },
            ChartIdentity {
                name: "2 fb^3 = 27 eta2^3 - 9 eta1 eta3 + 2 eta1^3 - 3(w^2 - w) xi mod J",
                kind: IdentityKind::ModJ,
                sides: fix(
                    ("2*fb^3", "27*eta2^3 - 9*eta1*eta3 + 2*eta1^3 - 3*(w^2 - w)*xi"),
                    ("2*fb^3", "27*eta2^2 - 9*eta1*eta3 + 2*eta1^3 - 3*(w^2 - w)*xi"),
                    "27 eta2^3 read as 27 eta2^2",
                ),
            },
            ChartIdentity {
                name: "(1 + u0 u2)(1 - u0 eta1)(Z1 q2 - Z2 q1 - u1 (w - w^2) q3) + ... mod J",
                kind: IdentityKind::ModJ,
                sides: fix((l_lhs, l_rhs), (l_fixed, l_rhs), "u0 (eta1 - 3 eta3) read as u0 (eta1^2 - 3 eta3)"),
            },
            ChartIdentity {
                name: "u1 = -u0 u3",
                kind: IdentityKind::OnChart,
                sides: lit(("u1", "-u0*u3")),
            },
            ChartIdentity {
                name: "3 eta2 = u1 eta1 + u3",
                kind: IdentityKind::OnChart,
                sides: lit(("3*eta2", "u1*eta1 + u3")),
            },
            ChartIdentity {
                name: "u1 eta1 + u3 = u3 (1 - u0 eta1)",
                kind: IdentityKind::OnChart,
                sides: lit(("u1*eta1 + u3", "u3*(1 - u0*eta1)")),
            },
            ChartIdentity {
                name: "(1 + u0 u2) eta3 = (9 u1 eta2 - u2 eta1 + u0 u2 eta1^2)/3",
                kind: IdentityKind::OnChart,
                sides: lit(("(1 + u0*u2)*eta3", "1/3*(9*u1*eta2 - u2*eta1 + u0*u2*eta1^2)")),
            },
            ChartIdentity {
                name: "3(w^2 - w) xi = 2 u0 (eta1^2 - 3 eta3)^2 - 27 eta2^3 + 9 eta1 eta3 - 2 eta1^3",
                kind: IdentityKind::OnChart,
                sides: fix(
                    ("3*(w^2 - w)*xi", "2*u0*(eta1^2 - 3*eta3)^2 - 27*eta2^3 + 9*eta1*eta3 - 2*eta1^3"),
                    ("3*(w^2 - w)*xi", "2*u0*(eta1^2 - 3*eta3)^2 - 27*eta2^2 + 9*eta1*eta3 - 2*eta1^3"),
                    "27 eta2^3 read as 27 eta2^2",
                ),
            },
            ChartIdentity {
                name: "eta1 = -u2 - u0 u2^2 + 3 u0^2 u3^2",
                kind: IdentityKind::OnChart,
                sides: lit(("eta1", "-u2 - u0*u2^2 + 3*u0^2*u3^2")),
            },
        ],
    }
}

fn x_zero_prime() -> ChartA4 {
    let k = "(1 + u0p*u2p + u0p^2*u2p^2 - 3*u0p^3*u3p^2)";
    ChartA4 {
        name: ChartName::X0Prime,
        params: ["u0p", "u1p", "u2p", "u3p"],
        free: [0, 2, 3],
        generators: vec![
            ("g0", "fb - u0p*f^2"),
            ("q1", "f*Z2*Z3 - u1p*f*Z1 - u2p*Z2*Z3 - u3p*Z1"),
            ("q2", "f*w^2*Z3*Z1 - u1p*f*w^2*Z2 - u2p*Z3*Z1 - u3p*Z2"),
            ("q3", "f*w*Z1*Z2 - u1p*f*w*Z3 - u2p*Z1*Z2 - u3p*Z3"),
        ],
        solved: vec![
            ("u1p", lit("-u0p*u3p")),
            ("eta1", lit("-u2p - u0p*u2p^2 + 3*u0p^2*u3p^2")),
            ("eta2", lit(leak(format!("1/3*u3p*{k}")))),
            ("eta3", lit(leak(format!("1/3*(u2p^2 - 3*u0p*u3p^2)*{k}")))),
            ("xi", lit(leak(format!("(w^2 - w)/9*(-1 + u0p*u2p)*(3*u3p^2 + u2p^3 - 3*u0p*u2p*u3p^2)*{k}")))),
        ],
        inverse: vec![
            (
                "u0p",
                fix(
                    ("6*eta3 - 2*eta1^2", "3*(w - w^2)*xi + 9*eta1*eta3 - 2*eta1^2 - 27*eta2^2"),
                    ("6*eta3 - 2*eta1^2", "3*(w - w^2)*xi + 9*eta1*eta3 - 2*eta1^3 - 27*eta2^2"),
                    "eta1^2 in the denominator read as eta1^3",
                ),
            ),
            ("u1p", lit(("eta2*(-6*eta3 + 2*eta1^2)", X0P_DEN))),
            ("u2p", lit(("-(w - w^2)*xi*eta1 - 6*eta3^2 + 9*eta1*eta2^2 + eta1^2*eta3", X0P_DEN))),
            ("u3p", lit(("eta2*(3*(w - w^2)*xi + 9*eta1*eta3 - 27*eta2^2 - 2*eta1^3)", X0P_DEN))),
        ],
        volume: "(w^2 - w)/12",
        identities: Vec::new(),
    }
}

fn leak(s: String) -> &'static str {
    Box::leak(s.into_boxed_str())
}

pub fn chart(name: ChartName) -> ChartA4 {
    match name {
        ChartName::X0 => x_zero(),
        ChartName::X0Prime => x_zero_prime(),
        ChartName::XInf => x_inf(),
        ChartName::XInfPrime => x_inf_prime(),
    }
}

/// Same exponent vectors, read in another ring of the same size.
fn move_to<C: Scalar>(p: &Poly<C>, target: &RingRef) -> Poly<C> {
    Poly::from_terms(target, p.terms().map(|(e, c)| (e.clone(), c.clone())))
}

fn show_point(v: &[Cyclotomic]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// A chart with its text parsed and the readings settled.
pub struct ChartContext {
    pub chart: ChartA4,
    pub ring: RingRef,
    pub env: Env<Cyclotomic>,
    /// generators of J, Y − η and X − ξ included
    pub j: Vec<WPoly>,
    /// image of every ring variable on the chart
    pub on_chart: Vec<WPoly>,
    /// (parameter, numerator, denominator), in the reading that passed
    pub inverse: Vec<(&'static str, WPoly, WPoly)>,
    pub volume: Cyclotomic,
    pub checks: Vec<Check>,
}

fn settle<T: Copy, F>(name: String, t: &Transcribed<T>, mut test: F) -> Result<(T, Check), A4Error>
where
    F: FnMut(T) -> Result<Option<String>, A4Error>,
{
    let literal = match test(t.literal) {
        Ok(None) => return Ok((t.literal, Check::pass(name))),
        Ok(Some(r)) => r,
        Err(A4Error::Algebra(e)) => e.to_string(),
        Err(e) => return Err(e),
    };
    match &t.corrected {
        Some((c, note)) => match test(*c) {
            Ok(None) => Ok((
                *c,
                Check {
                    status: Status::Corrected,
                    residue: Some(literal),
                    ..Check::pass(name)
                }
                .with_note(*note),
            )),
            Ok(Some(r)) => Ok((*c, Check::fail(name, r).with_note(*note))),
            Err(A4Error::Algebra(e)) => Ok((*c, Check::fail(name, e.to_string()).with_note(*note))),
            Err(e) => Err(e),
        },
        None => Ok((t.literal, Check::fail(name, literal))),
    }
}

fn nonzero(p: WPoly) -> Option<String> {
    if p.is_zero() {
        None
    } else {
        Some(p.to_string())
    }
}

impl ChartContext {
    pub fn new(chart: ChartA4) -> Result<Self, A4Error> {
        let ring = chart.ring();
        let inv = InvariantSet::new(&z_ring());
        let mut env = piece_env(&z_ring());
        for (n, p) in inv.named() {
            env.set_poly(n, p.to_cyclotomic());
        }
        let mut j = Vec::new();
        for (label, text) in &chart.generators {
            let g = parse_poly(text, &ring, &env)?;
            env.set_poly(label, g.clone());
            j.push(g);
        }
        for (y, e) in ["Y1", "Y2", "Y3", "X"].iter().zip(ETA) {
            j.push(parse_poly(&format!("{y} - {e}"), &ring, &env)?);
        }
        let var = |n: &str| WPoly::named(&ring, n);
        let id: Vec<WPoly> = (0..ring.nvars()).map(|i| WPoly::var(&ring, i)).collect();
        let id_name = chart.name.id();
        let mut checks = Vec::new();

        // bound parameters: the closure of the relation among invariants decides the reading
        let closure_text = format!("xi^2 - ({})", EQ_TRI_RHS.replace('Y', "eta"));
        let closure = parse_poly(&closure_text, &ring, &env)?;
        let images_for = |texts: &[&str]| -> Result<Vec<WPoly>, A4Error> {
            let mut images = id.clone();
            for ((name, _), text) in chart.solved.iter().zip(texts) {
                let p = parse_poly(text, &ring, &env)?;
                images[ring.index_of(name).expect("solved names are ring variables")] = p;
            }
            Ok(images)
        };
        let literal: Vec<&str> = chart.solved.iter().map(|(_, t)| t.literal).collect();
        let corrected: Vec<&str> = chart
            .solved
            .iter()
            .map(|(_, t)| t.corrected.map_or(t.literal, |c| c.0))
            .collect();
        let notes: Vec<&str> = chart.solved.iter().filter_map(|(_, t)| t.corrected.map(|c| c.1)).collect();
        let closure_of = |texts: &[&str]| -> Result<Option<String>, A4Error> {
            let images = images_for(texts)?;
            Ok(nonzero(closure.substitute(&images, &ring)?))
        };
        let solved = Transcribed {
            literal: 0usize,
            corrected: if notes.is_empty() { None } else { Some((1usize, "")) },
        };
        let (pick, mut c) = settle(format!("{id_name}: solved parameters satisfy the invariant relation"), &solved, |k| {
            closure_of(if k == 0 { &literal } else { &corrected })
        })?;
        if c.status == Status::Corrected || (c.status == Status::Fail && pick == 1) {
            c.note = Some(notes.join("; "));
        }
        checks.push(c);
        let on_chart = images_for(if pick == 0 { &literal } else { &corrected })?;

        // inverse formulas composed with the solved parameters
        let mut inverse = Vec::new();
        for (name, t) in &chart.inverse {
            let target = var(name).substitute(&on_chart, &ring)?;
            let ((num, den), c) = settle(format!("{id_name}: inverse formula for {name}"), t, |(n, d)| {
                let n = parse_poly(n, &ring, &env)?.substitute(&on_chart, &ring)?;
                let d = parse_poly(d, &ring, &env)?.substitute(&on_chart, &ring)?;
                if d.is_zero() {
                    return Ok(Some("denominator vanishes on the chart".into()));
                }
                Ok(nonzero(&n - &(&target * &d)))
            })?;
            checks.push(c);
            inverse.push((*name, parse_poly(num, &ring, &env)?, parse_poly(den, &ring, &env)?));
        }
        let volume = parse_poly(chart.volume, &ring, &env)?.constant_term();
        Ok(ChartContext {
            chart,
            ring,
            env,
            j,
            on_chart,
            inverse,
            volume,
            checks,
        })
    }

    pub fn id(&self) -> &'static str {
        self.chart.name.id()
    }

    pub fn free_indices(&self) -> Vec<usize> {
        self.chart.free_names().iter().map(|n| self.ring.index_of(n).expect("param")).collect()
    }

    /// Restrict to the chart, then fix the free parameters.
    pub fn specialize(&self, p: &WPoly, free: &[Cyclotomic]) -> Result<WPoly, A4Error> {
        let mut images = self.on_chart.clone();
        let consts: Vec<(usize, WPoly)> = self
            .free_indices()
            .into_iter()
            .zip(free)
            .map(|(i, c)| (i, WPoly::constant(&self.ring, c.clone())))
            .collect();
        let fix: Vec<WPoly> = (0..self.ring.nvars())
            .map(|i| {
                consts
                    .iter()
                    .find(|(k, _)| *k == i)
                    .map_or_else(|| WPoly::var(&self.ring, i), |(_, c)| c.clone())
            })
            .collect();
        for im in images.iter_mut() {
            *im = im.substitute(&fix, &self.ring)?;
        }
        let q = p.substitute(&images, &self.ring)?;
        Ok(q.embed(&z_ring())?)
    }

    pub fn ideal_at(&self, free: &[Cyclotomic]) -> Result<Vec<WPoly>, A4Error> {
        self.j.iter().map(|g| self.specialize(g, free)).collect()
    }

    /// Free parameters as functions of Z, through the inverse formulas.
    pub fn free_functions(&self) -> Result<Vec<RationalFunction<Cyclotomic>>, A4Error> {
        let z = z_ring();
        let inv = InvariantSet::new(&z);
        let mut images = vec![WPoly::zero(&z); self.ring.nvars()];
        for i in 0..3 {
            images[i] = WPoly::var(&z, i);
        }
        for (e, (_, y)) in ETA.iter().zip(inv.named()) {
            images[self.ring.index_of(e).expect("eta")] = y.to_cyclotomic();
        }
        self.chart
            .free_names()
            .iter()
            .map(|n| {
                let (_, num, den) = self.inverse.iter().find(|(m, _, _)| m == n).expect("free inverse");
                Ok(RationalFunction::new(num.substitute(&images, &z)?, den.substitute(&images, &z)?)?)
            })
            .collect()
    }

    /// Parse one side pair of an identity to lhs − rhs.
    pub fn difference(&self, sides: (&str, &str)) -> Result<WPoly, A4Error> {
        Ok(&parse_poly(sides.0, &self.ring, &self.env)? - &parse_poly(sides.1, &self.ring, &self.env)?)
    }
}

impl ChartContext {
    /// Free parameters in [−4, 4] ∖ {0} off the zero locus of every inverse
    /// denominator, so that special values do not hide a wrong term.
    pub fn samples(&self, seed: u64, count: usize) -> Result<Vec<Vec<Cyclotomic>>, A4Error> {
        let dens = self
            .inverse
            .iter()
            .map(|(_, _, d)| d.substitute(&self.on_chart, &self.ring))
            .collect::<Result<Vec<_>, _>>()?;
        let free = self.free_indices();
        let mut rng = SampleRng::new(seed);
        let mut out = Vec::new();
        let mut tries = 0;
        while out.len() < count && tries < 10_000 {
            tries += 1;
            let vals: Vec<i64> = (0..3).map(|_| rng.int_in(-4, 4)).collect();
            if vals.contains(&0) {
                continue;
            }
            let pt: Vec<Cyclotomic> = vals.iter().map(|&v| Cyclotomic::from_ints(v, 0)).collect();
            let mut full = vec![Cyclotomic::from_ints(0, 0); self.ring.nvars()];
            for (i, v) in free.iter().zip(&pt) {
                full[*i] = v.clone();
            }
            let mut ok = true;
            for d in &dens {
                ok &= !d.eval(&full)?.is_zero();
            }
            if ok && !out.contains(&pt) {
                out.push(pt);
            }
        }
        Ok(out)
    }
}

/// Z ∈ {1..9}³ with distinct squares where every function has a nonzero denominator.
pub fn admissible_points(
    rng: &mut SampleRng,
    fns: &[&[RationalFunction<Cyclotomic>]],
    count: usize,
) -> Vec<Vec<Cyclotomic>> {
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count && tries < 10_000 {
        tries += 1;
        let z: Vec<i64> = (0..3).map(|_| rng.int_in(1, 9)).collect();
        if z[0] == z[1] || z[1] == z[2] || z[0] == z[2] {
            continue;
        }
        let p: Vec<Cyclotomic> = z.iter().map(|&x| Cyclotomic::from_ints(x, 0)).collect();
        let ok = fns
            .iter()
            .flat_map(|f| f.iter())
            .all(|f| f.den.eval(&p).map(|d| !d.is_zero()).unwrap_or(false));
        if ok && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChartReport {
    pub chart: String,
    pub checks: Vec<Check>,
}

impl ChartReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }
}

const MOD_J_SAMPLES: usize = 3;
const VOLUME_POINTS: usize = 5;

fn check_identity(
    ctx: &ChartContext,
    name: String,
    kind: IdentityKind,
    diff: &WPoly,
    quotients: &[(Vec<Cyclotomic>, Quotient)],
) -> Result<Option<String>, A4Error> {
    let _ = name;
    match kind {
        IdentityKind::Exact => Ok(nonzero(diff.clone())),
        IdentityKind::OnChart => Ok(nonzero(diff.substitute(&ctx.on_chart, &ctx.ring)?)),
        IdentityKind::ModJ => {
            for (pt, q) in quotients {
                let r = q.reduce(&ctx.specialize(diff, pt)?)?;
                if !r.is_zero() {
                    return Ok(Some(format!("at {:?}: {r}", show_point(pt))));
                }
            }
            Ok(None)
        }
    }
}

pub fn verify_chart(name: ChartName, seed: u64) -> Result<ChartReport, A4Error> {
    let ctx = ChartContext::new(chart(name))?;
    let id = ctx.id();
    let mut checks = ctx.checks.clone();

    // J at sampled chart points has colength 12
    let samples = ctx.samples(seed, MOD_J_SAMPLES)?;
    let mut quotients = Vec::new();
    let mut lengths = Vec::new();
    for pt in &samples {
        let q = Quotient::new(&ctx.ideal_at(pt)?, MonomialOrder::grlex(3))?;
        lengths.push(q.dim());
        quotients.push((pt.clone(), q));
    }
    let shown: Vec<Vec<String>> = samples.iter().map(|p| show_point(p)).collect();
    checks.push(
        Check::from_bool(
            format!("{id}: colength 12 at sampled points"),
            lengths.iter().all(|&n| n == 12),
            format!("{lengths:?}"),
        )
        .with_samples(shown.clone()),
    );

    // identities: transcribed for x0, xinf; conjugated from them for the primed charts
    if name.is_primed() {
        let base = ChartContext::new(chart(name.conjugate()))?;
        for ident in &base.chart.identities {
            let sides = ident.sides.corrected.map_or(ident.sides.literal, |c| c.0);
            let diff = move_to(&base.difference(sides)?.conj(), &ctx.ring);
            let cname = format!("{id}: conjugate of {}", ident.name);
            let r = check_identity(&ctx, cname.clone(), ident.kind, &diff, &quotients)?;
            let mut c = match r {
                None => Check::pass(cname),
                Some(r) => Check::fail(cname, r),
            };
            if let Some((_, note)) = ident.sides.corrected {
                c = c.with_note(format!("conjugate of the corrected reading: {note}"));
            }
            checks.push(if ident.kind == IdentityKind::ModJ { c.with_samples(shown.clone()) } else { c });
        }
    } else {
        for ident in &ctx.chart.identities {
            let cname = format!("{id}: {}", ident.name);
            let (_, c) = settle(cname.clone(), &ident.sides, |sides| {
                let diff = ctx.difference(sides)?;
                check_identity(&ctx, cname.clone(), ident.kind, &diff, &quotients)
            })?;
            checks.push(if ident.kind == IdentityKind::ModJ { c.with_samples(shown.clone()) } else { c });
        }
    }

    // zero parameters give the central ideal
    let zero = vec![Cyclotomic::from_ints(0, 0); 3];
    let at_zero = GroebnerIdeal::new(&ctx.ideal_at(&zero)?, MonomialOrder::grlex(3))?;
    let central = GroebnerIdeal::new(&central_ideal(ctx.chart.central_ideal())?.ideal(), MonomialOrder::grlex(3))?;
    let mut stray = None;
    for (a, b) in [(&at_zero, &central), (&central, &at_zero)] {
        for g in &a.gb {
            let r = b.reduce(g)?;
            if !r.is_zero() && stray.is_none() {
                stray = Some(r.to_string());
            }
        }
    }
    checks.push(match stray {
        None => Check::pass(format!("{id}: zero parameters give the central ideal")),
        Some(r) => Check::fail(format!("{id}: zero parameters give the central ideal"), r),
    });

    checks.push(verify_volume(&ctx, seed)?);
    Ok(ChartReport {
        chart: id.to_string(),
        checks,
    })
}

/// det ∂(free)/∂Z = 1/c at admissible points.
pub fn verify_volume(ctx: &ChartContext, seed: u64) -> Result<Check, A4Error> {
    let fns = ctx.free_functions()?;
    let mut rng = SampleRng::new(seed ^ 0x5a5a);
    let points = admissible_points(&mut rng, &[&fns], VOLUME_POINTS);
    let name = format!("{}: dZ = ({}) d{}", ctx.id(), ctx.chart.volume, ctx.chart.free_names().join(" d"));
    if points.len() < VOLUME_POINTS {
        return Ok(Check::fail(name, "too few admissible points"));
    }
    let want = ctx.volume.inv().ok_or_else(|| A4Error::Structure("zero volume constant".into()))?;
    for p in &points {
        let d = jacobian_determinant(&fns, &[0, 1, 2], p)?;
        if d != want {
            return Ok(Check::fail(name, format!("det = {d} at {:?}, expected {want}", show_point(p)))
                .with_samples(points.iter().map(|p| show_point(p)).collect()));
        }
    }
    Ok(Check::pass(name).with_samples(points.iter().map(|p| show_point(p)).collect()))
}

/// Conjugating one chart's data gives the other's, in the readings that passed.
pub fn verify_conjugate_pair(name: ChartName) -> Result<Vec<Check>, A4Error> {
    let a = ChartContext::new(chart(name))?;
    let b = ChartContext::new(chart(name.conjugate()))?;
    let conj = |p: &WPoly| move_to(&p.conj(), &b.ring);
    let label = format!("conj({}) = {}", a.id(), b.id());
    let mut out = Vec::new();
    let gens_ok = a.j.iter().zip(&b.j).all(|(x, y)| conj(x) == *y) && a.j.len() == b.j.len();
    out.push(Check::from_bool(format!("{label}: generators of J"), gens_ok, "generators differ"));
    let solved_ok = a.on_chart.iter().zip(&b.on_chart).all(|(x, y)| conj(x) == *y);
    out.push(Check::from_bool(format!("{label}: solved parameters"), solved_ok, "solved parameters differ"));
    let inverse_ok = a.inverse.iter().zip(&b.inverse).all(|((_, n1, d1), (_, n2, d2))| {
        RationalFunction { num: conj(n1), den: conj(d1) }.equals(&RationalFunction { num: n2.clone(), den: d2.clone() })
    });
    out.push(Check::from_bool(format!("{label}: inverse formulas"), inverse_ok, "inverse formulas differ"));
    out.push(Check::from_bool(
        format!("{label}: volume constant"),
        a.volume.conj() == b.volume,
        format!("{} vs {}", a.volume.conj(), b.volume),
    ));
    Ok(out)
}

/// Chart pairs for the global volume form: every unordered pair, self-pairs included.
pub fn chart_pairs() -> Vec<(ChartName, ChartName)> {
    let mut out = Vec::new();
    for (i, a) in ChartName::ALL.iter().enumerate() {
        for b in &ChartName::ALL[i..] {
            out.push((*a, *b));
        }
    }
    out
}

/// On overlaps the free coordinates of one chart are rational in the other's,
/// and the transition Jacobian is the ratio of the two constants.
pub fn verify_global_volume_form(seed: u64) -> Result<Vec<Check>, A4Error> {
    let ctxs: Vec<ChartContext> = ChartName::ALL
        .iter()
        .map(|n| ChartContext::new(chart(*n)))
        .collect::<Result<_, _>>()?;
    let get = |n: ChartName| &ctxs[ChartName::ALL.iter().position(|m| *m == n).expect("chart")];
    let mut rng = SampleRng::new(seed);
    let mut out = Vec::new();
    for (na, nb) in chart_pairs() {
        let (a, b) = (get(na), get(nb));
        let name = format!("volume form on {} | {}", a.id(), b.id());
        let fa = a.free_functions()?;
        let fb = b.free_functions()?;
        let points = admissible_points(&mut rng, &[&fa, &fb], VOLUME_POINTS);
        if points.len() < VOLUME_POINTS {
            out.push(Check::fail(name, "too few admissible points"));
            continue;
        }
        // b's free coordinates written on a's chart
        let trans: Vec<RationalFunction<Cyclotomic>> = b
            .chart
            .free_names()
            .iter()
            .map(|n| {
                let (_, num, den) = b.inverse.iter().find(|(m, _, _)| m == n).expect("free inverse");
                let images: Vec<WPoly> = b
                    .ring
                    .names()
                    .iter()
                    .map(|v| match a.ring.index_of(v) {
                        Some(i) if ETA.contains(&v.as_str()) => a.on_chart[i].clone(),
                        _ => WPoly::zero(&a.ring),
                    })
                    .collect();
                Ok(RationalFunction::new(num.substitute(&images, &a.ring)?, den.substitute(&images, &a.ring)?)?)
            })
            .collect::<Result<_, A4Error>>()?;
        let ratio = a.volume.clone() * b.volume.inv().expect("nonzero constant");
        let mut failure = None;
        for z in &points {
            let ja = jacobian_determinant(&fa, &[0, 1, 2], z)?;
            let jb = jacobian_determinant(&fb, &[0, 1, 2], z)?;
            if ja.clone() * &b.volume.inv().expect("nonzero") != jb.clone() * &a.volume.inv().expect("nonzero") {
                // 1/c_A : 1/c_B
                failure = Some(format!("Z-Jacobians {ja}, {jb} at {:?}", show_point(z)));
                break;
            }
            let mut full = vec![Cyclotomic::from_ints(0, 0); a.ring.nvars()];
            for (k, f) in a.free_indices().into_iter().zip(&fa) {
                full[k] = f.eval(z)?;
            }
            let mut same_point = true;
            for (t, g) in trans.iter().zip(&fb) {
                if t.eval(&full)? != g.eval(z)? {
                    same_point = false;
                }
            }
            if !same_point {
                failure = Some(format!("transition disagrees with the inverse formulas at {:?}", show_point(z)));
                break;
            }
            let jt = jacobian_determinant(&trans, &a.free_indices(), &full)?;
            if jt != ratio {
                failure = Some(format!("transition Jacobian {jt} at {:?}, expected {ratio}", show_point(z)));
                break;
            }
        }
        let shown = points.iter().map(|p| show_point(p)).collect();
        out.push(
            match failure {
                None => Check::pass(name),
                Some(r) => Check::fail(name, r),
            }
            .with_samples(shown),
        );
    }
    Ok(out)
}
