//! The four central ideals: I(o) plus finitely many of the m_k.

use symbolic_core::{parse_poly, Cyclotomic, MonomialOrder, RingRef, WPoly};

use crate::coinvariants::{class_representatives, piece, piece_env, pieces};
use crate::invariants::{z_ring, InvariantSet};
use crate::quotient::Quotient;
use crate::{A4Error, Check};

#[derive(Clone, Debug)]
pub struct CentralIdealA4 {
    pub name: &'static str,
    /// the extra generators; I(o) is added by [`CentralIdealA4::ideal`]
    pub generators: Vec<WPoly>,
    pub quotient_decomposition: Vec<&'static str>,
}

const TABLE: [(&str, &[&str], &[&str]); 4] = [
    ("x0", &["f"], &["m0", "m1", "m3", "m4", "m6", "m7"]),
    ("x0'", &["fb"], &["m0", "m1", "m2", "m4", "m5", "m8"]),
    ("xinf", &["Z1*f", "w^2*Z2*f", "w*Z3*f", "fb^2"], &["m0", "m1", "m2", "m3", "m4", "m6"]),
    ("xinf'", &["Z1*fb", "w*Z2*fb", "w^2*Z3*fb", "f^2"], &["m0", "m1", "m2", "m3", "m4", "m5"]),
];

impl CentralIdealA4 {
    pub fn ideal(&self) -> Vec<WPoly> {
        let mut all = self.generators.clone();
        all.extend(InvariantSet::new(&z_ring()).origin_ideal());
        all
    }
}

pub fn central_ideals(ring: &RingRef) -> Vec<CentralIdealA4> {
    let env = piece_env(ring);
    TABLE
        .iter()
        .map(|(name, gens, quot)| CentralIdealA4 {
            name,
            generators: gens.iter().map(|s| parse_poly(s, ring, &env).expect("fixed text parses")).collect(),
            quotient_decomposition: quot.to_vec(),
        })
        .collect()
}

pub fn central_ideal(name: &str) -> Result<CentralIdealA4, A4Error> {
    central_ideals(&z_ring())
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| A4Error::Input(format!("no central ideal named {name:?}")))
}

/// Colength 12; the listed pieces are independent and span the quotient, the
/// others lie in the ideal; the trace character is the regular one.
pub fn verify_central_ideal(c: &CentralIdealA4) -> Result<Vec<Check>, A4Error> {
    let ring = z_ring();
    let all = pieces(&ring);
    let q = Quotient::new(&c.ideal(), MonomialOrder::grlex(3))?;
    let mut out = vec![Check::from_bool(
        format!("{}: colength 12", c.name),
        q.dim() == 12,
        format!("colength {}", q.dim()),
    )];

    let listed: Vec<WPoly> = c
        .quotient_decomposition
        .iter()
        .flat_map(|l| piece(&all, l).basis.clone())
        .collect();
    let rank = q.rank(&listed)?;
    out.push(Check::from_bool(
        format!("{}: listed pieces span the quotient", c.name),
        listed.len() == 12 && rank == 12,
        format!("{} elements of rank {rank}", listed.len()),
    ));

    let mut stray = None;
    for p in &all {
        if c.quotient_decomposition.contains(&p.label.as_str()) {
            continue;
        }
        for b in &p.basis {
            let r = q.reduce(b)?;
            if !r.is_zero() && stray.is_none() {
                stray = Some(format!("{}: {r}", p.label));
            }
        }
    }
    out.push(match stray {
        None => Check::pass(format!("{}: other pieces lie in the ideal", c.name)),
        Some(r) => Check::fail(format!("{}: other pieces lie in the ideal", c.name), r),
    });

    let traces = class_representatives().iter().map(|g| q.trace(g)).collect::<Result<Vec<_>, _>>()?;
    let regular: Vec<Cyclotomic> = [12, 0, 0, 0].iter().map(|&n| Cyclotomic::from_ints(n, 0)).collect();
    let mut label_sum = vec![Cyclotomic::from_ints(0, 0); 4];
    for l in &c.quotient_decomposition {
        for (s, x) in label_sum.iter_mut().zip(piece(&all, l).irreducible.character()) {
            *s = s.clone() + x;
        }
    }
    let show = |v: &[Cyclotomic]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    out.push(Check::from_bool(
        format!("{}: regular character", c.name),
        traces == regular && label_sum == regular,
        format!("trace ({}), labels ({})", show(&traces), show(&label_sum)),
    ));
    Ok(out)
}
