use std::collections::{BTreeMap, BTreeSet};

use ar_singularity::{build_xi, ArGroup, CellLabel, XiStar};
use ideal_calculus::*;
use itertools::Itertools;
use proptest::prelude::*;

fn g(r: i64) -> ArGroup {
    ArGroup::new(r, 4).unwrap()
}

fn star(r: i64) -> XiStar {
    XiStar::build(&build_xi(g(r)).unwrap()).unwrap()
}

fn mono(text: &str) -> Vec<i64> {
    // "Z1Z3Z4" or "1"
    let mut e = vec![0; 4];
    if text == "1" {
        return e;
    }
    for d in text.split('Z').filter(|s| !s.is_empty()) {
        e[d.parse::<usize>().unwrap() - 1] += 1;
    }
    e
}

#[test]
fn origin_ideal() {
    let j = io_ideal(&g(1));
    let mut want = vec![vec![1, 1, 1, 1]];
    for i in 0..4 {
        let mut e = vec![0; 4];
        e[i] = 2;
        want.push(e);
    }
    want.sort();
    assert_eq!(j.generators, want);
    assert_eq!(io_ideal(&g(2)).generators.len(), 5);
    for r in 1..=4 {
        // box [0, r]^4 minus the vectors with no zero entry
        let q = (r + 1) as usize;
        assert_eq!(io_ideal(&g(r)).complement().unwrap().len(), q.pow(4) - (q - 1).pow(4));
    }
    assert_eq!(io_ideal(&g(1)).complement().unwrap().len(), 15);
}

#[test]
fn eigenspaces_of_the_origin() {
    let g1 = g(1);
    let z1 = CharacterClass::of(&g1, &[1, 0, 0, 0]);
    let mut got = eigenspace_generators(&g1, &z1);
    got.sort();
    assert_eq!(got, vec![vec![0, 1, 1, 1], vec![1, 0, 0, 0]]);
    for r in 1..=3 {
        let gr = g(r);
        let io = io_ideal(&gr);
        let comp = io.complement().unwrap();
        assert_eq!(eigenspace_generators(&gr, &CharacterClass::trivial(&gr)), vec![vec![0; 4]]);
        for rho in CharacterClass::all(&gr) {
            let members: Vec<&Vec<i64>> = comp.iter().filter(|e| CharacterClass::of(&gr, e) == rho).collect();
            let minimal: BTreeSet<Vec<i64>> = members
                .iter()
                .filter(|e| !members.iter().any(|f| f != *e && f.iter().zip(e.iter()).all(|(a, b)| a <= b)))
                .map(|e| (*e).clone())
                .collect();
            let got: BTreeSet<Vec<i64>> = eigenspace_generators(&gr, &rho).into_iter().collect();
            assert_eq!(got, minimal, "r = {r}, rho = {:?}", rho.residue);
            if r == 1 && !rho.is_trivial() {
                let v: Vec<_> = got.into_iter().collect();
                assert_eq!(v.len(), 2);
                assert!(v[0].iter().zip(&v[1]).all(|(a, b)| a + b == 1));
            }
        }
    }
}

#[test]
fn regularity_examples() {
    let g1 = g(1);
    let d1 = StaircaseData::from_label(1, &CellLabel::DeltaU { a: vec![1, 0, 0, 0] }).unwrap();
    assert!(is_regular_quotient(&d1.ideal(), &g1).regular);
    let c = is_regular_quotient(&io_ideal(&g1), &g1);
    assert!(!c.regular);
    assert!(c.diagnostic.unwrap().contains("15"));
    let m = MonomialIdeal::new((0..4).map(|i| (0..4).map(|k| (k == i) as i64).collect()).collect());
    assert!(!is_regular_quotient(&m, &g1).regular);
    let open = MonomialIdeal::new(vec![vec![2, 0, 0, 0], vec![0, 2, 0, 0], vec![0, 0, 2, 0]]);
    assert!(is_regular_quotient(&open, &g1).diagnostic.unwrap().contains("infinite"));
}

#[test]
fn character_group_laws() {
    for r in 1..=3 {
        let gr = g(r);
        assert_eq!(CharacterClass::all(&gr).len(), gr.order());
        let e = [1, 2, 0, 3];
        let f = [0, 1, 1, 2];
        let ef: Vec<i64> = e.iter().zip(&f).map(|(a, b)| a + b).collect();
        assert_eq!(
            CharacterClass::of(&gr, &e).mul(&CharacterClass::of(&gr, &f), &gr),
            CharacterClass::of(&gr, &ef)
        );
        assert!(CharacterClass::of(&gr, &[r + 1, 0, 0, 0]).is_trivial());
        assert!(CharacterClass::of(&gr, &[1, 1, 1, 1]).is_trivial());
    }
}

/// Complement of every regular monomial ideal, found by growing order ideals
/// one monomial at a time along a fixed linear extension of divisibility.
fn brute_force_clusters(r: i64) -> BTreeSet<BTreeSet<Vec<i64>>> {
    let gr = g(r);
    let size = gr.order();
    let mut cands: Vec<Vec<i64>> = (0..4).map(|_| 0..=r + 1).multi_cartesian_product().collect();
    cands.sort_by_key(|e| (e.iter().sum::<i64>(), e.clone()));
    let chars: Vec<CharacterClass> = cands.iter().map(|e| CharacterClass::of(&gr, e)).collect();
    let mut out = BTreeSet::new();
    let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut used: BTreeSet<CharacterClass> = BTreeSet::new();
    fn go(
        start: usize,
        size: usize,
        cands: &[Vec<i64>],
        chars: &[CharacterClass],
        set: &mut BTreeSet<Vec<i64>>,
        used: &mut BTreeSet<CharacterClass>,
        out: &mut BTreeSet<BTreeSet<Vec<i64>>>,
    ) {
        if set.len() == size {
            out.insert(set.clone());
            return;
        }
        for k in start..cands.len() {
            let e = &cands[k];
            if used.contains(&chars[k]) {
                continue;
            }
            let closed = (0..4).all(|i| {
                if e[i] == 0 {
                    return true;
                }
                let mut d = e.clone();
                d[i] -= 1;
                set.contains(&d)
            });
            if !closed {
                continue;
            }
            set.insert(e.clone());
            used.insert(chars[k].clone());
            go(k + 1, size, cands, chars, set, used, out);
            set.remove(e);
            used.remove(&chars[k]);
        }
    }
    go(0, size, &cands, &chars, &mut set, &mut used, &mut out);
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for (r, count) in [(1, 12), (2, 43)] {
        let gr = g(r);
        let ideals = enumerate_central_ideals(&gr).unwrap();
        assert_eq!(ideals.len(), count);
        let ours: BTreeSet<BTreeSet<Vec<i64>>> = ideals
            .iter()
            .map(|(_, j)| j.complement().unwrap().into_iter().collect())
            .collect();
        assert_eq!(ours.len(), count);
        assert_eq!(ours, brute_force_clusters(r), "r = {r}");
        let io = io_ideal(&gr);
        for (_, j) in &ideals {
            assert!(j.contains_ideal(&io));
            assert!(!j.contains(&[0, 0, 0, 0]));
        }
    }
}

#[test]
fn counts_by_type() {
    for r in 1..=4 {
        let ideals = enumerate_central_ideals(&g(r)).unwrap();
        let mut by: BTreeMap<&str, usize> = BTreeMap::new();
        for (s, _) in &ideals {
            let k = match s.kind {
                StaircaseKind::DeltaU => "u",
                StaircaseKind::DeltaD => "d",
                _ => "c",
            };
            *by.entry(k).or_default() += 1;
        }
        let (u, d, c) = ((r + 1) * (r + 2) * (r + 3) / 6, (r - 1) * r * (r + 1) / 6, r * (r + 1) * (r + 2) / 6);
        assert_eq!(by.get("u").copied().unwrap_or(0) as i64, u);
        assert_eq!(by.get("d").copied().unwrap_or(0) as i64, d);
        assert_eq!(by.get("c").copied().unwrap_or(0) as i64, 8 * c);
    }
}

#[test]
fn twelve_ideals_of_a1() {
    let table: [(&str, &str); 12] = [
        ("1 Z2 Z3 Z4 Z2Z3 Z2Z4 Z3Z4 Z2Z3Z4", "D1"),
        ("1 Z1 Z3 Z4 Z1Z4 Z1Z3 Z3Z4 Z1Z3Z4", "D2"),
        ("1 Z1 Z2 Z4 Z1Z4 Z2Z4 Z1Z2 Z1Z2Z4", "D3"),
        ("1 Z1 Z2 Z3 Z2Z3 Z1Z3 Z1Z2 Z1Z2Z3", "D4"),
        ("1 Z1 Z2 Z3 Z4 Z2Z3 Z2Z4 Z3Z4", "C1"),
        ("1 Z1 Z2 Z3 Z4 Z1Z4 Z1Z3 Z3Z4", "C2"),
        ("1 Z1 Z2 Z3 Z4 Z1Z4 Z2Z4 Z1Z2", "C3"),
        ("1 Z1 Z2 Z3 Z4 Z2Z3 Z1Z3 Z1Z2", "C4"),
        ("1 Z1 Z2 Z3 Z4 Z1Z4 Z1Z3 Z1Z2", "C1'"),
        ("1 Z1 Z2 Z3 Z4 Z2Z3 Z2Z4 Z1Z2", "C2'"),
        ("1 Z1 Z2 Z3 Z4 Z2Z3 Z1Z3 Z3Z4", "C3'"),
        ("1 Z1 Z2 Z3 Z4 Z1Z4 Z2Z4 Z3Z4", "C4'"),
    ];
    let ideals = enumerate_central_ideals(&g(1)).unwrap();
    for (w, name) in table {
        let want: BTreeSet<Vec<i64>> = w.split(' ').map(mono).collect();
        let (s, _) = ideals
            .iter()
            .find(|(_, j)| j.complement().unwrap().into_iter().collect::<BTreeSet<_>>() == want)
            .unwrap_or_else(|| panic!("{name} missing"));
        let label = s.cell_label();
        let expect = match name.as_bytes()[0] {
            b'D' => {
                let i = name[1..].parse::<usize>().unwrap() - 1;
                CellLabel::DeltaU {
                    a: (0..4).map(|k| (k == i) as i64).collect(),
                }
            }
            _ => {
                let i = name[1..2].parse().unwrap();
                if name.ends_with('\'') {
                    CellLabel::Cp { a: vec![0; 4], i }
                } else {
                    CellLabel::C { a: vec![0; 4], i }
                }
            }
        };
        assert_eq!(label, expect, "{name}");
    }
    // J0 of C1 with its generators spelled out
    let c1 = StaircaseData::from_label(1, &CellLabel::C { a: vec![0; 4], i: 1 }).unwrap();
    assert_eq!(c1.l, [2; 4]);
    assert_eq!(c1.l_pair, [1, 1, 1, 2, 2, 2]);
    let want = MonomialIdeal::new(
        "Z1Z1 Z2Z2 Z3Z3 Z4Z4 Z1Z2 Z1Z3 Z1Z4 Z2Z3Z4"
            .split(' ')
            .map(mono)
            .collect(),
    );
    assert_eq!(c1.ideal(), want);
}

#[test]
fn ideals_and_cells_correspond() {
    for r in 1..=3 {
        let st = star(r);
        let ideals = enumerate_central_ideals(&g(r)).unwrap();
        assert_eq!(ideals.len(), st.labels.len());
        let mut hit = BTreeSet::new();
        for (s, _) in &ideals {
            let c = cell_of_ideal(s, &st).unwrap();
            assert!(hit.insert(c));
            assert_eq!(&ideal_of_cell(&st, c).unwrap(), s);
        }
        assert!(ideal_of_cell(&st, st.labels.len()).is_err());
    }
    assert!(cell_of_ideal(&enumerate_central_ideals(&g(1)).unwrap()[0].0, &star(2)).is_err());
}

#[test]
fn cones_give_the_same_staircases() {
    for r in 1..=3 {
        let st = star(r);
        for cell in 0..st.labels.len() {
            let s = ideal_of_cell(&st, cell).unwrap();
            let mut comp = s.ideal().complement().unwrap();
            comp.sort();
            assert_eq!(cone_staircase(&st, cell), Some(comp), "r = {r}, {:?}", st.labels[cell]);
        }
    }
}

#[test]
fn one_eigenvector_survives() {
    for r in 1..=3 {
        let gr = g(r);
        let ideals = enumerate_central_ideals(&gr).unwrap();
        for rho in CharacterClass::all(&gr).into_iter().filter(|c| !c.is_trivial()) {
            let gens = eigenspace_generators(&gr, &rho);
            for (s, j) in &ideals {
                let outside = gens.iter().filter(|e| !j.contains(e)).count();
                assert_eq!(outside, 1, "r = {r}, {:?}, rho {:?}", s.l, rho.residue);
            }
        }
    }
}

#[test]
fn staircase_json_round_trip() {
    for (s, _) in enumerate_central_ideals(&g(2)).unwrap() {
        let j = IdealJson::from_staircase(&s);
        let text = j.to_string_pretty();
        let back = IdealJson::from_str(&text).unwrap();
        assert_eq!(back, j);
        assert_eq!(back.to_staircase().unwrap(), s);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }
    let s = StaircaseData::from_label(1, &CellLabel::C { a: vec![0; 4], i: 1 }).unwrap();
    let mut j = IdealJson::from_staircase(&s);
    j.l_pair.insert("12".into(), 2);
    assert!(j.to_staircase().is_err());
    let mut j = IdealJson::from_staircase(&s);
    j.kind = "C7".into();
    assert!(j.to_staircase().is_err());
}

#[test]
fn kind_names_parse_back() {
    for k in [
        StaircaseKind::DeltaU,
        StaircaseKind::DeltaD,
        StaircaseKind::C(3),
        StaircaseKind::Cprime(2),
    ] {
        assert_eq!(StaircaseKind::parse(&k.name()), Some(k));
    }
    assert_eq!(StaircaseKind::parse("C0"), None);
    assert_eq!(StaircaseKind::parse("Cx'"), None);
}

proptest! {
    #[test]
    fn relations_reject_random_staircases(r in 1i64..=3, l in prop::array::uniform4(1i64..=4), k in 0usize..10) {
        let kinds = [
            StaircaseKind::DeltaU, StaircaseKind::DeltaD,
            StaircaseKind::C(1), StaircaseKind::C(2), StaircaseKind::C(3), StaircaseKind::C(4),
            StaircaseKind::Cprime(1), StaircaseKind::Cprime(2), StaircaseKind::Cprime(3), StaircaseKind::Cprime(4),
        ];
        let s = StaircaseData::from_l(r, l, kinds[k]);
        // the relations alone force a regular quotient
        let regular = l.iter().all(|&x| x <= r + 1) && is_regular_quotient(&s.ideal(), &g(r)).regular;
        prop_assert!(!s.satisfies_relations() || regular);
    }
}
