use std::time::Instant;

use ar_singularity::{build_xi, ArGroup, CellLabel, XiStar};
use ideal_calculus::*;
use symbolic_core::{parse_poly, Env, QPoly, Ring, RingRef};

fn star(r: i64) -> XiStar {
    XiStar::build(&build_xi(ArGroup::new(r, 4).unwrap()).unwrap()).unwrap()
}

fn chart_ring() -> RingRef {
    Ring::new(&["Z1", "Z2", "Z3", "Z4", "v1", "v2", "v3", "v4"])
}

fn symbolic(ring: &RingRef) -> Vec<QPoly> {
    (4..8).map(|k| QPoly::var(ring, k)).collect()
}

fn p(ring: &RingRef, s: &str) -> QPoly {
    parse_poly(s, ring, &Env::new()).unwrap()
}

#[test]
fn a1_delta1_generators() {
    let ring = chart_ring();
    let gens = chart_ideal_generators(1, &CellLabel::DeltaU { a: vec![1, 0, 0, 0] }, &ring, &symbolic(&ring)).unwrap();
    assert_eq!(gens.len(), 15);
    for want in ["Z1 - v1*Z2*Z3*Z4", "Z2^2 - v2", "Z3^2 - v3", "Z4^2 - v4"] {
        assert!(gens.contains(&p(&ring, want)), "{want}");
    }
}

#[test]
fn a1_center_generators() {
    let ring = chart_ring();
    let c1 = chart_ideal_generators(1, &CellLabel::C { a: vec![0; 4], i: 1 }, &ring, &symbolic(&ring)).unwrap();
    for want in [
        "Z2*Z3*Z4 - v1*Z1",
        "Z1*Z2 - v2*Z3*Z4",
        "Z1*Z3 - v3*Z2*Z4",
        "Z1*Z4 - v4*Z2*Z3",
        "Z1^2 - v1*v2*v3*v4",
    ] {
        assert!(c1.contains(&p(&ring, want)), "C1: {want}");
    }
    let c2p = chart_ideal_generators(1, &CellLabel::Cp { a: vec![0; 4], i: 2 }, &ring, &symbolic(&ring)).unwrap();
    for want in ["Z3*Z4 - v1*Z1*Z2", "Z2^2 - v2", "Z1*Z4 - v3*Z2*Z3", "Z1*Z3 - v4*Z2*Z4"] {
        assert!(c2p.contains(&p(&ring, want)), "C2': {want}");
    }
}

#[test]
fn parameter_count_and_ring_are_checked() {
    let ring = chart_ring();
    let label = CellLabel::DeltaU { a: vec![1, 0, 0, 0] };
    assert!(matches!(
        chart_ideal_generators(1, &label, &ring, &symbolic(&ring)[..3]),
        Err(IdealError::Input(_))
    ));
    let bad = Ring::new(&["x", "y", "z", "w"]);
    let params: Vec<QPoly> = (0..4).map(|_| QPoly::one(&bad)).collect();
    assert!(chart_ideal_generators(1, &label, &bad, &params).is_err());
    assert!(chart_generators(1, &CellLabel::Octahedron { a: vec![0; 4] }).is_err());
}

#[test]
fn levels_match_the_staircase() {
    for r in 1..=4 {
        let st = star(r);
        for label in &st.labels {
            let s = StaircaseData::from_label(r, label).unwrap();
            let gens = chart_generators(r, label).unwrap();
            for gen in &gens {
                let Some(f) = &gen.family else { continue };
                let want = match f.kind {
                    FamilyKind::F => s.l[f.indices[0]],
                    FamilyKind::G => s.pair(f.indices[0], f.indices[1]),
                    FamilyKind::H => s.l_triple[f.indices[0]],
                };
                assert_eq!(f.level, want, "r = {r}, {label:?}, {}", gen.name());
            }
        }
    }
}

#[test]
fn beta_is_the_chart_monomial() {
    // β = Z^{lead − tail} written in the chart: the exponent of slot l is the
    // pairing with the l-th scaled vertex
    for r in 1..=3 {
        let st = star(r);
        let d = &st.decomposition;
        for (cell, label) in st.labels.iter().enumerate() {
            let chart = st.chart(cell).unwrap();
            for gen in chart_generators(r, label).unwrap() {
                let (lead, tail) = gen.monomials();
                let m: Vec<i64> = lead.iter().zip(&tail).map(|(a, b)| a - b).collect();
                let want: Vec<i64> = chart
                    .vertex_order
                    .iter()
                    .map(|&v| {
                        let s = d.scaled_vertex(v);
                        let x = m.iter().zip(&s).fold(symbolic_core::int(0), |acc, (a, b)| {
                            acc + symbolic_core::int(*a) * b
                        });
                        assert!(x.is_integer());
                        i64::try_from(x.to_integer()).unwrap()
                    })
                    .collect();
                assert_eq!(gen.beta.to_vec(), want, "r = {r}, {label:?}, {}", gen.name());
            }
        }
    }
}

#[test]
fn families_are_eigenpolynomials() {
    for r in 1..=3 {
        let g = ArGroup::new(r, 4).unwrap();
        for label in &star(r).labels {
            for gen in chart_generators(r, label).unwrap() {
                let (lead, tail) = gen.monomials();
                assert_eq!(CharacterClass::of(&g, &lead), CharacterClass::of(&g, &tail), "{}", gen.name());
            }
        }
    }
}

#[test]
fn zero_parameters_give_the_monomial_ideal() {
    let ring = Ring::new(&["Z1", "Z2", "Z3", "Z4"]);
    for r in 1..=3 {
        for label in &star(r).labels {
            let zero: Vec<QPoly> = (0..4).map(|_| QPoly::zero(&ring)).collect();
            let gens = chart_ideal_generators(r, label, &ring, &zero).unwrap();
            let monos: Vec<Vec<i64>> = gens
                .iter()
                .map(|q| {
                    assert_eq!(q.len(), 1);
                    q.terms().next().unwrap().0 .0.iter().map(|&x| x as i64).collect()
                })
                .collect();
            let s = StaircaseData::from_label(r, label).unwrap();
            assert_eq!(MonomialIdeal::new(monos), s.ideal(), "r = {r}, {label:?}");
        }
    }
}

#[test]
fn sampled_colength_a1() {
    for label in [CellLabel::DeltaU { a: vec![1, 0, 0, 0] }, CellLabel::Cp { a: vec![0; 4], i: 2 }] {
        let rep = certify_colength(1, &label, 10, 7).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.colengths, vec![Some(8); 10]);
        assert!(rep.samples.iter().flatten().all(|x| (1..=7).contains(x)));
    }
}

#[test]
fn sampled_colength_a2_each_type() {
    let t = Instant::now();
    let labels = [
        CellLabel::DeltaU { a: vec![1, 1, 0, 0] },
        CellLabel::DeltaD { a: vec![0, 0, 0, 0] },
        CellLabel::C { a: vec![1, 0, 0, 0], i: 3 },
        CellLabel::Cp { a: vec![0, 0, 1, 0], i: 1 },
    ];
    for label in labels {
        let rep = certify_colength(2, &label, 5, 11).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.colengths, vec![Some(27); 5]);
    }
    eprintln!("r = 2 colength: {:?}", t.elapsed());
}

#[test]
fn colength_agrees_across_orders() {
    let rep = certify_colength_with(2, &CellLabel::C { a: vec![0, 1, 0, 0], i: 2 }, 2, 3, true).unwrap();
    assert!(rep.pass, "{rep:?}");
    assert!(certify_colength(4, &CellLabel::DeltaU { a: vec![4, 0, 0, 0] }, 1, 0).is_err());
}
