//! Catalog of the reduction identities behind the γ-relations, checked with the
//! γ's as free variables.
//!
//! Each entry is an identity `combination ≡ result`, exact when `modulus` is
//! empty and modulo the listed generators otherwise. Membership is certified on
//! a ladder: plain division in the listed order, division with each generator
//! moved to the front, then a Gröbner basis under a small S-pair budget.

use serde::{Deserialize, Serialize};
use symbolic_core::{
    buchberger_with_budget, normal_form, parse_poly, spair_budget, Env, MonomialOrder, OrderKind, QPoly, Ring,
    RingRef,
};

use ar_singularity::ArGroup;
use itertools::Itertools;

use crate::families::GeneratorFamily;
use crate::staircase::{enumerate_central_ideals, StaircaseData, StaircaseKind, PAIRS};
use crate::IdealError;

/// γ_I for the non-empty I ⊆ {1,2,3,4}, by size then lexicographically.
pub const GAMMA_NAMES: [&str; 15] = [
    "g1", "g2", "g3", "g4", "g12", "g13", "g14", "g23", "g24", "g34", "g123", "g124", "g134", "g234", "g1234",
];

const GROEBNER_RUNG_BUDGET: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correction {
    pub combination: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaEntry {
    pub chart: String,
    pub name: String,
    pub ring: Vec<String>,
    /// supplies the ints l1, l12, l123, … and the polynomials F_i, G_ij, H_i
    pub staircase: Option<StaircaseData>,
    pub combination: String,
    pub result: String,
    pub modulus: Vec<String>,
    pub correction: Option<Correction>,
    /// applied to every index after parsing: k ↦ permutation[k] (0-based)
    pub permutation: [usize; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rung {
    Exact,
    /// division with the generator of this index tried first (`None`: listed order)
    Division { front: Option<usize> },
    Groebner,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GammaOutcome {
    Pass { rung: Rung },
    /// the transcribed form fails, the corrected one passes
    Corrected { rung: Rung, literal_residue: String },
    Fail { residue: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub chart: String,
    pub name: String,
    pub outcome: GammaOutcome,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        !matches!(self.outcome, GammaOutcome::Fail { .. })
    }
}

fn gamma_ring() -> Vec<String> {
    ["Z1", "Z2", "Z3", "Z4"].iter().chain(GAMMA_NAMES.iter()).map(|s| s.to_string()).collect()
}

/// Name of γ_I (indices 0-based, any order).
pub fn gamma_name(idx: &[usize]) -> String {
    let s: String = idx.iter().sorted().map(|i| (i + 1).to_string()).collect();
    format!("g{s}")
}

fn permute_name(name: &str, sigma: &[usize; 4]) -> String {
    let (head, digits) = name.split_at(1);
    if digits.is_empty() || !digits.chars().all(|c| ('1'..='4').contains(&c)) {
        return name.to_string();
    }
    let idx: Vec<usize> = digits.chars().map(|c| sigma[c as usize - '1' as usize]).collect();
    if head == "g" {
        gamma_name(&idx)
    } else {
        let s: String = idx.iter().map(|i| (i + 1).to_string()).collect();
        format!("{head}{s}")
    }
}

/// Rename every indexed variable of p under σ.
pub fn permute_poly(p: &QPoly, sigma: &[usize; 4]) -> Result<QPoly, IdealError> {
    let ring = p.ring().clone();
    let images = ring
        .names()
        .iter()
        .map(|n| {
            let m = permute_name(n, sigma);
            ring.index_of(&m)
                .map(|k| QPoly::var(&ring, k))
                .ok_or_else(|| IdealError::Input(format!("{n} has no image {m} in the ring")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(p.substitute(&images, &ring)?)
}

/// Env for a staircase: ints l_i, l_ij, l_ijk and F_i = F_i^{(l_i)}(γ_i),
/// G_ij = G_ij^{(l_ij)}(γ_ij), H_i = H_i^{(l_jks)}(γ_jks).
pub fn staircase_env(ring: &RingRef, s: &StaircaseData) -> Env<symbolic_core::Rational> {
    let mut env = Env::new();
    let gamma = |idx: &[usize]| QPoly::named(ring, &gamma_name(idx));
    for i in 0..4 {
        env.set_int(&format!("l{}", i + 1), s.l[i]);
        env.set_poly(&format!("F{}", i + 1), GeneratorFamily::f(s.r, i, s.l[i]).poly(ring, &gamma(&[i])));
        let rest: Vec<usize> = (0..4).filter(|&k| k != i).collect();
        let tname: String = rest.iter().map(|k| (k + 1).to_string()).collect();
        env.set_int(&format!("l{tname}"), s.l_triple[i]);
        env.set_poly(
            &format!("H{}", i + 1),
            GeneratorFamily::h(s.r, i, s.l_triple[i]).poly(ring, &gamma(&rest)),
        );
    }
    for (p, &(i, j)) in PAIRS.iter().enumerate() {
        env.set_int(&format!("l{}{}", i + 1, j + 1), s.l_pair[p]);
        env.set_poly(
            &format!("G{}{}", i + 1, j + 1),
            GeneratorFamily::g(s.r, i, j, s.l_pair[p]).poly(ring, &gamma(&[i, j])),
        );
    }
    env
}

impl GammaEntry {
    fn new(chart: &str, name: &str, combination: &str, result: &str, modulus: &[&str]) -> Self {
        GammaEntry {
            chart: chart.into(),
            name: name.into(),
            ring: gamma_ring(),
            staircase: None,
            combination: combination.into(),
            result: result.into(),
            modulus: modulus.iter().map(|s| s.to_string()).collect(),
            correction: None,
            permutation: [0, 1, 2, 3],
        }
    }

    fn permuted(&self, chart: &str, sigma: [usize; 4]) -> Self {
        let mut e = self.clone();
        e.chart = chart.into();
        e.permutation = [0, 1, 2, 3].map(|k| sigma[self.permutation[k]]);
        e.name = format!("{} [{}]", self.name, e.permutation.iter().map(|i| i + 1).join(""));
        e
    }

    pub fn ring(&self) -> RingRef {
        Ring::new(&self.ring)
    }

    fn parse(&self, ring: &RingRef, text: &str) -> Result<QPoly, IdealError> {
        let env = match &self.staircase {
            Some(s) => staircase_env(ring, s),
            None => Env::new(),
        };
        let p = parse_poly(text, ring, &env)?;
        permute_poly(&p, &self.permutation)
    }

    /// The result as a polynomial (after the permutation).
    pub fn result_poly(&self) -> Result<QPoly, IdealError> {
        let ring = self.ring();
        self.parse(&ring, &self.result)
    }

    /// The γ-relation carried by the result: its coefficient when the result
    /// is a single Z-monomial times a polynomial in the other variables.
    pub fn relation(&self) -> Result<Option<QPoly>, IdealError> {
        let res = self.result_poly()?;
        let z: Vec<usize> = (0..4).collect();
        let parts = res.collect_by(&z);
        Ok(if parts.len() == 1 { parts.into_values().next() } else { None })
    }

    fn certify(&self, ring: &RingRef, combination: &str) -> Result<Result<Rung, QPoly>, IdealError> {
        let diff = self.parse(ring, combination)? - self.parse(ring, &self.result)?;
        if diff.is_zero() {
            return Ok(Ok(Rung::Exact));
        }
        if self.modulus.is_empty() {
            return Ok(Err(diff));
        }
        let gens = self
            .modulus
            .iter()
            .map(|t| self.parse(ring, t))
            .collect::<Result<Vec<_>, _>>()?;
        let order = MonomialOrder::with_params(OrderKind::GradedLex, 4, ring.nvars());
        let first = normal_form(&diff, &gens, &order)?;
        if first.is_zero() {
            return Ok(Ok(Rung::Division { front: None }));
        }
        for k in 0..gens.len() {
            let mut g = gens.clone();
            let front = g.remove(k);
            g.insert(0, front);
            if normal_form(&diff, &g, &order)?.is_zero() {
                return Ok(Ok(Rung::Division { front: Some(k) }));
            }
        }
        let budget = spair_budget().min(GROEBNER_RUNG_BUDGET);
        if let Ok(gb) = buchberger_with_budget(&gens, &order, budget) {
            if normal_form(&diff, &gb, &order)?.is_zero() {
                return Ok(Ok(Rung::Groebner));
            }
        }
        Ok(Err(first))
    }

    pub fn verify(&self) -> Result<Certificate, IdealError> {
        let ring = self.ring();
        let outcome = match self.certify(&ring, &self.combination)? {
            Ok(rung) => GammaOutcome::Pass { rung },
            Err(residue) => match &self.correction {
                Some(c) => match self.certify(&ring, &c.combination)? {
                    Ok(rung) => GammaOutcome::Corrected {
                        rung,
                        literal_residue: residue.to_string(),
                    },
                    Err(_) => GammaOutcome::Fail {
                        residue: residue.to_string(),
                    },
                },
                None => GammaOutcome::Fail {
                    residue: residue.to_string(),
                },
            },
        };
        Ok(Certificate {
            chart: self.chart.clone(),
            name: self.name.clone(),
            outcome,
        })
    }
}

fn transposition(a: usize, b: usize) -> [usize; 4] {
    let mut s = [0, 1, 2, 3];
    s.swap(a, b);
    s
}

fn a1_c1() -> Vec<GammaEntry> {
    let j = [
        "Z1*Z4 - g14*Z2*Z3",
        "Z1*Z3 - g13*Z2*Z4",
        "Z1*Z2 - g12*Z3*Z4",
        "Z2*Z3*Z4 - g234*Z1",
        "Z1^2 - g1",
        "Z2^2 - g2",
        "Z3^2 - g3",
        "Z4^2 - g4",
    ];
    let c = "A1(4):C1";
    vec![
        GammaEntry::new(
            c,
            "g1 = g12 g13 g4",
            "Z2*(Z1^2 - g1) - Z1*(Z1*Z2 - g12*Z3*Z4)",
            "(g12*g13*g4 - g1)*Z2",
            &j,
        ),
        GammaEntry::new(
            c,
            "g2 = g234 g12",
            "Z1*(Z2^2 - g2) - Z2*(Z1*Z2 - g12*Z3*Z4)",
            "(g12*g234 - g2)*Z1",
            &j,
        ),
        GammaEntry::new(
            c,
            "g3 = g234 g13",
            "Z1*(Z3^2 - g3) - Z3*(Z1*Z3 - g13*Z2*Z4)",
            "(g13*g234 - g3)*Z1",
            &j,
        ),
        GammaEntry::new(
            c,
            "g4 = g234 g14",
            "Z1*(Z4^2 - g4) - Z4*(Z1*Z4 - g14*Z2*Z3)",
            "(g14*g234 - g4)*Z1",
            &j,
        ),
    ]
}

fn a1_c2p() -> Vec<GammaEntry> {
    let c = "A1(4):C2'";
    let base = vec![
        GammaEntry::new(
            c,
            "g1 = g2 g13 g14, step 1",
            "Z1*(Z1*Z4 - g14*Z2*Z3) - Z4*(Z1^2 - g1)",
            "-g14*Z1*Z2*Z3 + g1*Z4",
            &[],
        ),
        GammaEntry::new(
            c,
            "g1 = g2 g13 g14, step 2",
            "Z2*(-g14*Z1*Z2*Z3 + g1*Z4) + g14*Z1*Z3*(Z2^2 - g2)",
            "g1*Z2*Z4 - g14*g2*Z1*Z3",
            &[],
        ),
        GammaEntry::new(
            c,
            "g1 = g2 g13 g14, step 3",
            "(g1*Z2*Z4 - g14*g2*Z1*Z3) + g14*g2*(Z1*Z3 - g13*Z2*Z4)",
            "(g1 - g2*g13*g14)*Z2*Z4",
            &[],
        ),
    ];
    let mut out = base.clone();
    for (sigma, rel) in [(transposition(0, 2), "g3 = g2 g13 g34"), (transposition(0, 3), "g4 = g2 g14 g34")] {
        for e in &base {
            let mut p = e.permuted(c, sigma);
            p.name = p.name.replacen("g1 = g2 g13 g14", rel, 1);
            out.push(p);
        }
    }
    out
}

fn a1_delta1() -> Vec<GammaEntry> {
    let j = ["Z1 - g1*Z2*Z3*Z4", "Z2^2 - g2", "Z3^2 - g3", "Z4^2 - g4"];
    let c = "A1(4):Delta1";
    let z = |i: usize| format!("Z{}", i + 1);
    let v = |i: usize| format!("g{}", i + 1);
    let mut out = Vec::new();
    let mut push = |name: String, p: String| out.push(GammaEntry::new(c, &name, &p, "0", &j));
    push("F1".into(), "Z1 - g1*Z2*Z3*Z4".into());
    for i in 1..4 {
        push(format!("F{}", i + 1), format!("{}^2 - {}", z(i), v(i)));
    }
    for (i, k) in PAIRS {
        let rest: Vec<usize> = (0..4).filter(|&x| x != i && x != k).collect();
        let p = if i == 0 {
            format!("{}*{} - g1*{}*{}*{}", z(0), z(k), v(k), z(rest[0]), z(rest[1]))
        } else {
            format!("({}*{})^2 - {}*{}", z(i), z(k), v(i), v(k))
        };
        push(format!("G{}{}", i + 1, k + 1), p);
    }
    push("H1".into(), "(Z2*Z3*Z4)^2 - g2*g3*g4".into());
    for i in 1..4 {
        let rest: Vec<usize> = (1..4).filter(|&x| x != i).collect();
        push(
            format!("H{}", i + 1),
            format!(
                "Z1*{}*{} - g1*{}*{}*{}",
                z(rest[0]),
                z(rest[1]),
                v(rest[0]),
                v(rest[1]),
                z(i)
            ),
        );
    }
    push("Z1Z2Z3Z4".into(), "Z1*Z2*Z3*Z4 - g1*g2*g3*g4".into());
    out
}

fn a1_glue() -> Vec<GammaEntry> {
    let ring: Vec<String> = ["Z1", "Z2", "Z3", "Z4", "u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4", "w1", "w2", "w3", "w4"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mk = |chart: &str, name: &str, comb: &str, res: &str, m: &[&str]| {
        let mut e = GammaEntry::new(chart, name, comb, res, m);
        e.ring = ring.clone();
        e
    };
    let a = "A1(4):glue Delta1|C1";
    let b = "A1(4):glue C1|C2'";
    vec![
        mk(a, "u1 v1 = 1", "(Z2*Z3*Z4 - u1*Z1) + u1*(Z1 - v1*Z2*Z3*Z4)", "(1 - u1*v1)*Z2*Z3*Z4", &[]),
        mk(a, "u2 = v1 v2, step 1", "(Z1*Z2 - u2*Z3*Z4)*Z2 - (Z2^2 - v2)*Z1", "v2*Z1 - u2*Z2*Z3*Z4", &[]),
        mk(
            a,
            "u2 = v1 v2, step 2",
            "v2*(Z1 - v1*Z2*Z3*Z4) - (v2*Z1 - u2*Z2*Z3*Z4)",
            "(u2 - v1*v2)*Z2*Z3*Z4",
            &[],
        ),
        mk(b, "u2 w1 = 1", "(Z1*Z2 - u2*Z3*Z4) + u2*(Z3*Z4 - w1*Z1*Z2)", "(1 - u2*w1)*Z1*Z2", &[]),
        mk(b, "u3 = w4", "(Z1*Z3 - u3*Z2*Z4) - (Z1*Z3 - w4*Z2*Z4)", "(w4 - u3)*Z2*Z4", &[]),
        mk(b, "u4 = w3", "(Z1*Z4 - u4*Z2*Z3) - (Z1*Z4 - w3*Z2*Z3)", "(w3 - u4)*Z2*Z3", &[]),
        mk(
            b,
            "u1 = w1 w2",
            "(Z2*Z3*Z4 - u1*Z1)*Z2",
            "(w1*w2 - u1)*Z1*Z2",
            &["Z3*Z4 - w1*Z1*Z2", "Z2^2 - w2"],
        ),
    ]
}

/// The A₁(4) catalog: Δ_k, C_k, C_k′ for k = 1..4 (Δ₁, C₁, C₂′ and their
/// images under index transpositions) and the gluing relations.
pub fn a1_catalog() -> Vec<GammaEntry> {
    let mut out = Vec::new();
    let delta = a1_delta1();
    let c = a1_c1();
    let cp = a1_c2p();
    for k in 0..4 {
        let t = transposition(0, k);
        let name = format!("A1(4):Delta{}", k + 1);
        out.extend(delta.iter().map(|e| if k == 0 { e.clone() } else { e.permuted(&name, t) }));
        let name = format!("A1(4):C{}", k + 1);
        out.extend(c.iter().map(|e| if k == 0 { e.clone() } else { e.permuted(&name, t) }));
    }
    for k in 0..4 {
        let t = transposition(1, k);
        let name = format!("A1(4):C{}'", k + 1);
        out.extend(cp.iter().map(|e| if k == 1 { e.clone() } else { e.permuted(&name, t) }));
    }
    out.extend(a1_glue());
    out
}

struct Block {
    kinds: &'static [StaircaseKind],
    name: &'static str,
    combination: &'static str,
    result: &'static str,
    correction: Option<(&'static str, &'static str)>,
}

const ALL_FOUR: &[StaircaseKind] = &[
    StaircaseKind::DeltaU,
    StaircaseKind::DeltaD,
    StaircaseKind::C(1),
    StaircaseKind::Cprime(1),
];

const BLOCKS: &[Block] = &[
    Block {
        kinds: ALL_FOUR,
        name: "g1234 = g123 g4",
        combination: "Z1*Z2*Z3*F4 - g4*H4 - Z4^(l4-1)*(Z1*Z2*Z3*Z4 - g1234)",
        result: "(g1234 - g123*g4)*Z4^(l4-1)",
        correction: Some((
            "Z1*Z2*Z3*F4 + g4*H4 - Z4^(l4-1)*(Z1*Z2*Z3*Z4 - g1234)",
            "sign of the H4 term",
        )),
    },
    Block {
        kinds: &[StaircaseKind::DeltaU],
        name: "g123 = g12 g3",
        combination: "(Z1*Z2)^(l123)*F3 + g3*Z4^(l124-1)*G12 - Z3^(l34-1)*H4",
        result: "(g123 - g12*g3)*Z3^(l34-1)*Z4^(l4-1)",
        correction: None,
    },
    Block {
        kinds: &[StaircaseKind::DeltaU],
        name: "g13 = g1 g3",
        combination: "g3*(Z2*Z4)^(l124-1)*F1 + Z1^(l13)*F3 - Z3^(l3-l13)*G13",
        result: "(g13 - g1*g3)*Z3^(l234-1)*(Z2*Z4)^(l24-1)",
        correction: None,
    },
    Block {
        kinds: &[StaircaseKind::DeltaD],
        name: "g1 = g12 g134",
        combination: "(Z3*Z4)^(l134)*F1 - g134*Z2^(l234-1)*G12 - Z1^(l12)*H2",
        result: "(g12*g134 - g1)*Z2^(l234-1)*(Z3*Z4)^(l34-1)",
        correction: None,
    },
    Block {
        kinds: &[StaircaseKind::DeltaD],
        name: "g12 = g123 g124",
        combination: "-Z3^(l123)*G12 + g123*Z4^(l34-1)*H3 + (Z1*Z2)^(l124)*H4",
        result: "(g12 - g123*g124)*Z3^(l3-1)*Z4^(l34-1)",
        correction: None,
    },
    Block {
        kinds: &[StaircaseKind::C(1)],
        name: "g123 = g13 g2",
        combination: "g13*Z4^(l24-1)*F2 + Z2^(l13-l134+1)*G13 - (Z1*Z3)^(l134-1)*H4",
        result: "(g123 - g13*g2)*(Z1*Z3)^(l134-1)*Z4^(l4-1)",
        correction: None,
    },
    Block {
        kinds: &[StaircaseKind::C(1)],
        name: "g2 = g12 g234",
        combination: "-(Z3*Z4)^(l234)*F2 + g234*Z1^(l134-1)*G12 + Z2^(l12)*H1",
        result: "(g2 - g12*g234)*Z1^(l134-1)*(Z3*Z4)^(l34-1)",
        correction: None,
    },
    Block {
        kinds: &[StaircaseKind::C(1)],
        name: "g1 = g12 g134",
        combination: "-(Z3*Z4)^(l1-l12)*F1 + g134*Z2^(l234-1)*G12 + Z1^(l12)*H2",
        result: "(g1 - g12*g134)*Z2^(l234-1)*(Z3*Z4)^(l34-1)",
        correction: None,
    },
    Block {
        kinds: &[StaircaseKind::C(1)],
        name: "g23 = g2 g3",
        combination: "g2*(Z1*Z4)^(l3-l23)*F3 + Z3^(l23)*F2 - Z2^(l124-1)*G23",
        result: "(g23 - g2*g3)*Z2^(l124-1)*(Z1*Z4)^(l14-1)",
        correction: None,
    },
    Block {
        kinds: &[StaircaseKind::Cprime(1)],
        name: "g234 = g34 g2",
        combination: "(Z3*Z4)^(l234)*F2 + g2*Z1^(l1-l12)*G34 - Z2^(l12-1)*H1",
        result: "(g234 - g34*g2)*Z1^(l1-1)*Z2^(l12-1)",
        correction: None,
    },
    Block {
        kinds: &[StaircaseKind::Cprime(1)],
        name: "g2 = g23 g124",
        combination: "-Z3^(l23)*F2 + Z2^(l124)*G23 + g23*(Z1*Z4)^(l134-1)*H3",
        result: "(g2 - g23*g124)*(Z1*Z4)^(l134-1)*Z3^(l3-1)",
        correction: None,
    },
    Block {
        kinds: &[StaircaseKind::Cprime(1)],
        name: "g124 = g1 g24",
        combination: "(Z2*Z4)^(l124)*F1 + g1*Z3^(l3-l13)*G24 - Z1^(l13-1)*H3",
        result: "(g124 - g1*g24)*Z1^(l13-1)*Z3^(l3-1)",
        correction: None,
    },
    Block {
        kinds: &[StaircaseKind::Cprime(1)],
        name: "g12 = g1 g2",
        combination: "g2*(Z3*Z4)^(l1-l12)*F1 + Z1^(l12)*F2 - Z2^(l234-1)*G12",
        result: "(g12 - g1*g2)*Z2^(l234-1)*(Z3*Z4)^(l34-1)",
        correction: None,
    },
];

/// Chart name of the model derivation for a staircase type.
pub fn block_chart(kind: StaircaseKind) -> String {
    format!("Ar(4):{}", kind.name())
}

/// The model derivations for Δ_u, Δ_d, C₁ and C₁′, instantiated on every
/// staircase of those types at this r.
pub fn block_catalog(r: i64) -> Result<Vec<GammaEntry>, IdealError> {
    let g = ArGroup::new(r, 4)?;
    let stairs = enumerate_central_ideals(&g)?;
    let mut out = Vec::new();
    for (s, _) in &stairs {
        for b in BLOCKS.iter().filter(|b| b.kinds.contains(&s.kind)) {
            let mut e = GammaEntry::new(
                &block_chart(s.kind),
                &format!("{} l={:?}", b.name, s.l),
                b.combination,
                b.result,
                &[],
            );
            e.staircase = Some(s.clone());
            e.correction = b.correction.map(|(c, note)| Correction {
                combination: c.into(),
                note: note.into(),
            });
            out.push(e);
        }
    }
    Ok(out)
}

/// Verify every entry of a named chart ("A1(4):C1", "Ar(4):DeltaU", …) at r.
pub fn verify_gamma_relations(chart: &str, r: i64) -> Result<Vec<Certificate>, IdealError> {
    let entries: Vec<GammaEntry> = if chart.starts_with("A1(4):") {
        a1_catalog().into_iter().filter(|e| e.chart == chart).collect()
    } else {
        block_catalog(r)?.into_iter().filter(|e| e.chart == chart).collect()
    };
    if entries.is_empty() {
        return Err(IdealError::Input(format!("no catalog for chart {chart}")));
    }
    entries.iter().map(|e| e.verify()).collect()
}
