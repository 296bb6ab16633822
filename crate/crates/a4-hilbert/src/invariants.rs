//! Invariant generators, their relation, f and f̄, and the discriminant forms F₃, F₄.

use symbolic_core::{parse_poly, Env, QPoly, Rational, Ring, RingRef, WPoly};

use crate::group::{act, GENERATORS, GENERATOR_NAMES};
use crate::{A4Error, Check};

pub fn z_ring() -> RingRef {
    Ring::new(&["Z1", "Z2", "Z3"])
}

#[derive(Clone, Debug)]
pub struct InvariantSet {
    pub y1: QPoly,
    pub y2: QPoly,
    pub y3: QPoly,
    pub x: QPoly,
}

pub const EQ_TRI_RHS: &str = "-4*Y1^3*Y2^2 - 27*Y2^4 + 18*Y1*Y2^2*Y3 + Y1^2*Y3^2 - 4*Y3^3";

impl InvariantSet {
    pub fn new(ring: &RingRef) -> Self {
        let q = |s: &str| parse_poly(s, ring, &Env::new()).expect("fixed text parses");
        InvariantSet {
            y1: q("Z1^2 + Z2^2 + Z3^2"),
            y2: q("Z1*Z2*Z3"),
            y3: q("Z1^2*Z2^2 + Z2^2*Z3^2 + Z3^2*Z1^2"),
            x: q("(Z1^2 - Z2^2)*(Z2^2 - Z3^2)*(Z3^2 - Z1^2)"),
        }
    }

    pub fn named(&self) -> [(&'static str, &QPoly); 4] {
        [("Y1", &self.y1), ("Y2", &self.y2), ("Y3", &self.y3), ("X", &self.x)]
    }

    pub fn env(&self) -> Env<Rational> {
        let mut env = Env::new();
        for (n, p) in self.named() {
            env.set_poly(n, p.clone());
        }
        env
    }

    pub fn env_w(&self) -> Env<symbolic_core::Cyclotomic> {
        let mut env = Env::new();
        for (n, p) in self.named() {
            env.set_poly(n, p.to_cyclotomic());
        }
        env
    }

    /// The ideal of the origin fibre, I(o).
    pub fn origin_ideal(&self) -> Vec<WPoly> {
        self.named().iter().map(|(_, p)| p.to_cyclotomic()).collect()
    }
}

/// f = Z₁² + ωZ₂² + ω²Z₃² and f̄.
pub fn f_pair(ring: &RingRef) -> (WPoly, WPoly) {
    let env = Env::new();
    let f = parse_poly("Z1^2 + w*Z2^2 + w^2*Z3^2", ring, &env).expect("fixed text parses");
    let fb = f.conj();
    (f, fb)
}

pub fn verify_invariants() -> Result<Check, A4Error> {
    let ring = z_ring();
    let inv = InvariantSet::new(&ring);
    for (name, p) in inv.named() {
        let pw = p.to_cyclotomic();
        for (g, gname) in GENERATORS.iter().zip(GENERATOR_NAMES) {
            let d = &act(&pw, g)? - &pw;
            if !d.is_zero() {
                return Ok(Check::fail(format!("{name} invariant under {gname}"), d.to_string()));
            }
        }
    }
    Ok(Check::pass("invariants fixed by the generators"))
}

pub fn eq_tri_residue(ring: &RingRef) -> Result<QPoly, A4Error> {
    let inv = InvariantSet::new(ring);
    let rhs = parse_poly(EQ_TRI_RHS, ring, &inv.env())?;
    Ok(&inv.x.pow(2) - &rhs)
}

pub fn verify_eq_tri() -> Result<Check, A4Error> {
    let r = eq_tri_residue(&z_ring())?;
    Ok(Check::zero("X^2 = F(Y1, Y2, Y3)", &r))
}

pub fn verify_fxy() -> Result<Vec<Check>, A4Error> {
    let ring = z_ring();
    let inv = InvariantSet::new(&ring);
    let (f, fb) = f_pair(&ring);
    let env = inv.env_w().with_poly("f", f).with_poly("fb", fb);
    let mut out = Vec::new();
    for (name, lhs, rhs) in [
        ("f fb = Y1^2 - 3Y3", "f*fb", "Y1^2 - 3*Y3"),
        ("f^3 - fb^3 = 3(w^2 - w)X", "f^3 - fb^3", "3*(w^2 - w)*X"),
        ("f^3 + fb^3 = 27Y2^2 - 9Y1Y3 + 2Y1^3", "f^3 + fb^3", "27*Y2^2 - 9*Y1*Y3 + 2*Y1^3"),
    ] {
        let d = &parse_poly(lhs, &ring, &env)? - &parse_poly(rhs, &ring, &env)?;
        out.push(Check::zero(name, &d));
    }
    Ok(out)
}

pub const F3: &str = "-4*s2^3*s3^2 - 27*s3^4 + 16*s2^4*s4 - 128*s2^2*s4^2 + 144*s2*s3^2*s4 + 256*s4^3";

pub const F4: &str = "-4*s2^3*s3^2*s4^2 - 27*s3^4*s4^2 + 16*s2^4*s4^3 + 144*s2*s3^2*s4^3 \
    - 128*s2^2*s4^4 + 256*s4^5 - 72*s2^4*s3*s4*s5 + 108*s3^5*s5 - 630*s2*s3^3*s4*s5 \
    - 1600*s3*s4^3*s5 + 560*s2^2*s3*s4^2*s5 + 16*s2^3*s3^3*s5 - 900*s2^3*s4*s5^2 \
    + 2250*s3^2*s4*s5^2 + 2000*s2*s4^2*s5^2 + 108*s2^5*s5^2 + 825*s2^2*s3^2*s5^2 \
    - 3750*s2*s3*s5^3 + 3125*s5^4";

/// Coordinates z̃₁..z̃ₙ of the sum-zero hyperplane V ⊂ ℂⁿ⁺¹.
pub fn hyperplane_ring(n: usize) -> RingRef {
    let names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    Ring::new(&names)
}

/// z̃₁..z̃ₙ₊₁ with z̃ₙ₊₁ = −Σ z̃ⱼ.
pub fn hyperplane_coordinates(ring: &RingRef) -> Vec<QPoly> {
    let n = ring.nvars();
    let mut zs: Vec<QPoly> = (0..n).map(|i| QPoly::var(ring, i)).collect();
    let last = zs.iter().fold(QPoly::zero(ring), |acc, z| &acc - z);
    zs.push(last);
    zs
}

/// σ₀..σₘ of the given values.
pub fn elementary_symmetric(vals: &[QPoly], ring: &RingRef) -> Vec<QPoly> {
    let mut e = vec![QPoly::one(ring)];
    for v in vals {
        let mut next = e.clone();
        next.push(QPoly::zero(ring));
        for k in 1..next.len() {
            next[k] = &next[k] + &(&e[k - 1] * v);
        }
        e = next;
    }
    e
}

pub fn vandermonde(vals: &[QPoly], ring: &RingRef) -> QPoly {
    let mut d = QPoly::one(ring);
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            d = &d * &(&vals[i] - &vals[j]);
        }
    }
    d
}

/// s₂..sₙ₊₁ and d on V, as an environment for [`F3`] / [`F4`].
pub fn hyperplane_env(ring: &RingRef) -> Env<Rational> {
    let zs = hyperplane_coordinates(ring);
    let s = elementary_symmetric(&zs, ring);
    let mut env = Env::new();
    for (k, sk) in s.iter().enumerate().skip(1) {
        env.set_poly(&format!("s{k}"), sk.clone());
    }
    env.set_poly("d", vandermonde(&zs, ring));
    env
}

pub fn verify_discriminant(n: usize) -> Result<Check, A4Error> {
    let text = match n {
        3 => F3,
        4 => F4,
        _ => return Err(A4Error::Input(format!("discriminant form listed only for n = 3, 4, not {n}"))),
    };
    let ring = hyperplane_ring(n);
    let env = hyperplane_env(&ring);
    let r = &parse_poly("d^2", &ring, &env)? - &parse_poly(text, &ring, &env)?;
    Ok(Check::zero(format!("d^2 = F{n}(s)"), &r))
}

/// Z in terms of z̃ on V (n = 3).
pub fn z_from_hyperplane(ring: &RingRef) -> Vec<QPoly> {
    let t4 = hyperplane_coordinates(ring).pop().expect("n + 1 coordinates");
    let env = Env::new().with_poly("t4", t4);
    ["-t1 + t2 + t3 - t4", "t1 - t2 + t3 - t4", "t1 + t2 - t3 - t4"]
        .iter()
        .map(|s| parse_poly(s, ring, &env).expect("fixed text parses"))
        .collect()
}

/// Y₁ = −8s₂, Y₂ = −8s₃, Y₃ = 16s₂² − 64s₄, X = 64d after pulling back to V.
pub fn verify_invariants_on_hyperplane() -> Result<Vec<Check>, A4Error> {
    let t = hyperplane_ring(3);
    let z = z_ring();
    let images = z_from_hyperplane(&t);
    let env = hyperplane_env(&t);
    let inv = InvariantSet::new(&z);
    let mut out = Vec::new();
    for ((name, p), rhs) in inv.named().iter().zip(["-8*s2", "-8*s3", "16*s2^2 - 64*s4", "64*d"]) {
        let pulled = p.substitute(&images, &t)?;
        let d = &pulled - &parse_poly(rhs, &t, &env)?;
        out.push(Check::zero(format!("{name} = {rhs}"), &d));
    }
    Ok(out)
}
