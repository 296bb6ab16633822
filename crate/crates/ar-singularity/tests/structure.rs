use std::collections::{BTreeSet, HashMap, VecDeque};

use ar_singularity::{build_xi, ArGroup, CellLabel, CellType, FlopChoice, Resolution, XiStar};
use itertools::Itertools;
use proptest::prelude::*;
use symbolic_core::ExponentVector;

fn g(r: i64, n: usize) -> ArGroup {
    ArGroup::new(r, n).unwrap()
}

/// Independent count: slice every unit cube [b, b+1]⁴ ⊂ ℝ⁴_{≥0} by Σy = r+1.
/// Height 1 is a tetrahedron pointing up, 2 an octahedron, 3 one pointing down.
fn cube_slices(r: i64) -> (usize, usize, usize) {
    let mut up = 0;
    let mut oct = 0;
    let mut down = 0;
    for b in (0..4).map(|_| 0..=r + 1).multi_cartesian_product() {
        match r + 1 - b.iter().sum::<i64>() {
            1 => up += 1,
            2 => oct += 1,
            3 => down += 1,
            _ => {}
        }
    }
    (up, down, oct)
}

#[test]
fn cell_counts_match_cube_slicing() {
    for r in 1..=8 {
        let xi = build_xi(g(r, 4)).unwrap();
        let c = xi.classify_cells().unwrap();
        assert_eq!((c.delta_u, c.delta_d, c.octahedra), cube_slices(r), "r = {r}");
        assert_eq!(c, xi.group.expected_counts());
    }
}

#[test]
fn small_cases_by_hand() {
    let c = build_xi(g(1, 4)).unwrap().classify_cells().unwrap();
    assert_eq!((c.delta_u, c.delta_d, c.octahedra), (4, 0, 1));
    let c = build_xi(g(2, 4)).unwrap().classify_cells().unwrap();
    assert_eq!((c.delta_u, c.delta_d, c.octahedra, c.total()), (10, 1, 4, 15));
    let c = build_xi(g(3, 4)).unwrap().classify_cells().unwrap();
    assert_eq!((c.delta_u, c.delta_d, c.octahedra), (20, 4, 10));
}

#[test]
fn euler_identity_for_resolutions() {
    for r in 1..=5 {
        let c = ArGroup { r, n: 4 }.expected_counts();
        assert_eq!(c.delta_u + c.delta_d + 4 * c.octahedra, ((r + 1) * (r + 1) * (r + 1)) as usize);
    }
}

#[test]
fn xi_covers_the_simplex() {
    for r in 1..=5 {
        let xi = build_xi(g(r, 4)).unwrap();
        xi.decomposition.validate().unwrap();
        assert!(xi.decomposition.is_crepant().0);
        let (smooth, bad) = xi.decomposition.is_smooth();
        assert!(!smooth);
        assert_eq!(bad.len(), xi.octahedra.len());
    }
}

#[test]
fn low_dimensional_a1_cases() {
    // A₁(2), A₁(3) are resolved by Ξ itself
    for n in [2, 3] {
        let xi = build_xi(g(1, n)).unwrap();
        let d = &xi.decomposition;
        d.validate().unwrap();
        assert!(d.is_smooth().0 && d.is_crepant().0);
        assert_eq!(d.euler_number(), 1 << (n - 1));
    }
    let xi = build_xi(g(1, 3)).unwrap();
    assert_eq!(xi.decomposition.cells().len(), 4);
    // A₁(5): five corners and one hypersimplex, which is not a simplex
    let xi = build_xi(g(1, 5)).unwrap();
    xi.decomposition.validate().unwrap();
    let c = xi.classify_cells().unwrap();
    assert_eq!((c.delta_u, c.hypersimplices), (5, 1));
    assert!(!xi.decomposition.is_smooth().0);
    assert!(XiStar::build(&xi).is_err());
}

#[test]
fn octahedra_pair_through_their_centers() {
    for r in 1..=4 {
        let xi = build_xi(g(r, 4)).unwrap();
        let d = &xi.decomposition;
        for o in &xi.octahedra {
            let cell = &d.cells()[o.cell];
            assert_eq!(cell.len(), 6);
            let mut pairs = 0;
            for (&p, &q) in cell.iter().tuple_combinations() {
                let s: Vec<i64> = d.vertices()[p].iter().zip(&d.vertices()[q]).map(|(x, y)| x + y).collect();
                if s.iter().zip(&o.center).all(|(x, c)| *x == 2 * c) {
                    pairs += 1;
                }
            }
            assert_eq!(pairs, 3);
        }
    }
}

#[test]
fn xi_star_counts_and_smoothness() {
    let want = [(1, 12), (2, 43), (3, 104)];
    for (r, cells) in want {
        let xi = build_xi(g(r, 4)).unwrap();
        let star = XiStar::build(&xi).unwrap();
        let d = &star.decomposition;
        assert_eq!(d.euler_number(), cells);
        assert_eq!(cells as i64, (r + 1).pow(3) + 4 * xi.octahedra.len() as i64);
        d.validate().unwrap();
        assert!(d.is_smooth().0);
        assert!(d.two_of_three_holds() || !d.is_crepant().0);
        for v in 0..d.vertices().len() {
            let want = if star.centers.contains(&v) { 2 } else { 1 };
            assert_eq!(d.weight(v), want);
        }
        let mut k = d.canonical_divisor();
        k.sort();
        let mut expect: Vec<(usize, i64)> = star.centers.iter().map(|&c| (c, 1)).collect();
        expect.sort();
        assert_eq!(k, expect);
    }
}

#[test]
fn center_simplices_are_the_sign_patterns() {
    // C_i = {c} ∪ {c + s/2(r+1)} with s = +1 on {i, j}, −1 off it; C_i′ uses −s
    for r in 1..=3 {
        let xi = build_xi(g(r, 4)).unwrap();
        let star = XiStar::build(&xi).unwrap();
        let d = &star.decomposition;
        for (o, &cid) in star.octahedra.iter().zip(&star.centers) {
            let mut expect: BTreeSet<Vec<usize>> = BTreeSet::new();
            for i in 0..4 {
                for sign in [1i64, -1] {
                    let mut cell = vec![cid];
                    for j in (0..4).filter(|&j| j != i) {
                        let s: Vec<i64> = (0..4).map(|k| if k == i || k == j { sign } else { -sign }).collect();
                        let p: Vec<i64> = o.center.iter().zip(&s).map(|(c, x)| c + x).collect();
                        cell.push(d.vertex_index(&p).unwrap());
                    }
                    cell.sort();
                    expect.insert(cell);
                }
            }
            let got: BTreeSet<Vec<usize>> = d.star(cid).into_iter().map(|c| d.cells()[c].clone()).collect();
            assert_eq!(got, expect);
        }
    }
}

fn ev(v: Vec<i64>) -> ExponentVector {
    ExponentVector(v.into_iter().map(|x| x as i32).collect())
}

/// Closed forms of the chart monomials, as exponent vectors in Z_1..Z_4.
fn expected_chart(r: i64, label: &CellLabel) -> Option<Vec<ExponentVector>> {
    let rest = |i: usize, j: usize| -> Vec<usize> { (0..4).filter(|&x| x != i && x != j).collect() };
    let slots = match label {
        // Z_i^{r+1−l} / (∏_{j≠i} Z_j)^l with l = a_i
        CellLabel::DeltaU { a } => (0..4)
            .map(|i| (0..4).map(|k| if k == i { r + 1 - a[i] } else { -a[i] }).collect())
            .collect(),
        // (∏_{j≠i} Z_j)^l / Z_i^{r+1−l} with l = a_i + 1
        CellLabel::DeltaD { a } => (0..4)
            .map(|i| (0..4).map(|k| if k == i { -(r - a[i]) } else { a[i] + 1 }).collect())
            .collect(),
        CellLabel::C { a, i } => {
            let i = i - 1;
            (0..4)
                .map(|j| {
                    if j == i {
                        // (Z_jZ_kZ_s)^{a_i+1} / Z_i^{r−a_i}
                        (0..4).map(|k| if k == i { -(r - a[i]) } else { a[i] + 1 }).collect()
                    } else {
                        // (Z_iZ_j)^{r−a_i−a_j} / (Z_kZ_s)^{a_i+a_j+1}
                        (0..4)
                            .map(|k| if k == i || k == j { r - a[i] - a[j] } else { -(a[i] + a[j] + 1) })
                            .collect()
                    }
                })
                .collect()
        }
        CellLabel::Cp { a, i } => {
            let i = i - 1;
            (0..4)
                .map(|j| {
                    if j == i {
                        // Z_i^{r+1−a_i} / (Z_jZ_kZ_s)^{a_i}
                        (0..4).map(|k| if k == i { r + 1 - a[i] } else { -a[i] }).collect()
                    } else {
                        // (Z_kZ_s)^{r−a_k−a_s} / (Z_iZ_j)^{a_k+a_s+1}
                        let ks = rest(i, j);
                        let t = a[ks[0]] + a[ks[1]];
                        (0..4).map(|k| if ks.contains(&k) { r - t } else { -(t + 1) }).collect()
                    }
                })
                .collect::<Vec<Vec<i64>>>()
        }
        _ => return None,
    };
    Some(slots.into_iter().map(ev).collect())
}

#[test]
fn charts_have_the_closed_forms() {
    for r in 1..=3 {
        let xi = build_xi(g(r, 4)).unwrap();
        let star = XiStar::build(&xi).unwrap();
        for (cell, label) in star.labels.iter().enumerate() {
            let want = expected_chart(r, label).expect("every Ξ* cell has a closed form");
            assert_eq!(star.chart(cell).unwrap().coordinates, want, "r = {r}, {label:?}");
        }
    }
}

#[test]
fn walls_around_centers_have_degree_minus_one() {
    let xi = build_xi(g(2, 4)).unwrap();
    let star = XiStar::build(&xi).unwrap();
    let d = &star.decomposition;
    let pairs = d.adjacent_pairs();
    for &c in &star.centers {
        let s = d.star(c);
        let walls: Vec<_> = pairs.iter().filter(|(x, y)| s.contains(x) && s.contains(y)).collect();
        assert_eq!(walls.len(), 12);
        for &&(x, y) in &walls {
            assert_eq!(d.fiber_normal_degree(x, y).unwrap(), -1);
        }
    }
}

#[test]
fn exceptional_divisors_are_disjoint_cubes() {
    for (r, count) in [(1, 1), (2, 4), (3, 10), (5, 35)] {
        let xi = build_xi(g(r, 4)).unwrap();
        let star = XiStar::build(&xi).unwrap();
        let divs = star.exceptional_divisors();
        assert_eq!(divs.len(), count);
        assert_eq!(count as i64, r * (r + 1) * (r + 2) / 6);
        let mut seen = BTreeSet::new();
        for e in &divs {
            assert_eq!(e.cells.len(), 8);
            assert_eq!(e.link_vertices.len(), 6);
            assert_eq!(e.link_edges.len(), 12);
            assert_eq!(e.link_triangles.len(), 8);
            // octahedron boundary: every vertex of degree 4, every edge in two triangles
            for v in &e.link_vertices {
                assert_eq!(e.link_edges.iter().filter(|(x, y)| x == v || y == v).count(), 4);
            }
            for (x, y) in &e.link_edges {
                assert_eq!(e.link_triangles.iter().filter(|t| t.contains(x) && t.contains(y)).count(), 2);
            }
            for c in &e.cells {
                assert!(seen.insert(*c), "cell {c} is in two stars");
            }
        }
    }
}

#[test]
fn a1_four_three_resolutions() {
    let xi = build_xi(g(1, 4)).unwrap();
    let table = |y: [i64; 4]| xi.decomposition.vertex_index(&y.map(|x| 2 * x)).unwrap();
    let mut all = Vec::new();
    for k in 1..=3u8 {
        let res = Resolution::resolve(&xi, &FlopChoice::uniform(&xi, k)).unwrap();
        assert_eq!(res.decomposition.euler_number(), 8);
        // the inserted segment joins v^{k,4} and v^{i,j}
        let mut p = [0; 4];
        p[k as usize - 1] = 1;
        p[3] = 1;
        let mut pbar = [1, 1, 1, 0];
        pbar[k as usize - 1] = 0;
        let (p, pbar) = (table(p), table(pbar));
        let new_cells: Vec<_> = res.decomposition.cells()[4..].to_vec();
        assert!(new_cells.iter().all(|c| c.contains(&p) && c.contains(&pbar)));
        all.push(res);
    }
    for (x, y) in all.iter().tuple_combinations() {
        let only_x = x.decomposition.cells().iter().filter(|c| !y.decomposition.cells().contains(c)).count();
        assert_eq!(only_x, 4);
    }
    let center = xi.octahedra[0].center.clone();
    let flopped = all[0].flop(&center, 2).unwrap();
    assert_eq!(flopped.decomposition, all[1].decomposition);
    assert!(all[0].flop(&center, 1).is_err());
    assert!(all[0].flop(&[3, 1, 1, 1], 2).is_err());
}

#[test]
fn r2_resolutions_and_flop_graph() {
    let xi = build_xi(g(2, 4)).unwrap();
    let choices = FlopChoice::all(&xi);
    assert_eq!(choices.len(), 81);
    let mut by_vec: HashMap<Vec<u8>, Resolution> = HashMap::new();
    for ch in &choices {
        let res = Resolution::resolve(&xi, ch).unwrap();
        assert_eq!(res.decomposition.euler_number(), 27);
        by_vec.insert(res.choice_vector(), res);
    }
    let distinct: BTreeSet<Vec<Vec<usize>>> = by_vec
        .values()
        .map(|r| {
            let mut c = r.decomposition.cells().to_vec();
            c.sort();
            c
        })
        .collect();
    assert_eq!(distinct.len(), 81);
    // breadth-first search along single flops from the all-ones vector
    let start = vec![1u8; 4];
    let mut dist: HashMap<Vec<u8>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(v) = queue.pop_front() {
        let res = &by_vec[&v];
        for (o, oct) in xi.octahedra.iter().enumerate() {
            for k in (1..=3u8).filter(|&k| k != v[o]) {
                let next = res.flop(&oct.center, k).unwrap();
                let before: BTreeSet<_> = res.decomposition.cells().iter().cloned().collect();
                let after: BTreeSet<_> = next.decomposition.cells().iter().cloned().collect();
                assert_eq!(before.difference(&after).count(), 4);
                assert_eq!(next.decomposition.vertices(), res.decomposition.vertices());
                let w = next.choice_vector();
                if !dist.contains_key(&w) {
                    dist.insert(w.clone(), dist[&v] + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    assert_eq!(dist.len(), 81);
    for (v, d) in &dist {
        let hamming = v.iter().zip(&start).filter(|(a, b)| a != b).count();
        assert_eq!(*d, hamming);
        assert!(*d <= 4);
    }
}

#[test]
fn flop_is_an_involution() {
    let xi = build_xi(g(3, 4)).unwrap();
    let res = Resolution::resolve(&xi, &FlopChoice::uniform(&xi, 3)).unwrap();
    for o in &xi.octahedra {
        let there = res.flop(&o.center, 1).unwrap();
        let back = there.flop(&o.center, 3).unwrap();
        assert_eq!(back.decomposition, res.decomposition);
        assert_eq!(back.choice, res.choice);
    }
}

#[test]
fn resolution_json_round_trip() {
    let xi = build_xi(g(2, 4)).unwrap();
    let res = Resolution::resolve(&xi, &FlopChoice::from_vector(&xi, &[1, 2, 3, 1]).unwrap()).unwrap();
    let s = res.to_json_string().unwrap();
    assert!(s.contains("\"choiceVector\""));
    let back = Resolution::from_json_str(&s).unwrap();
    assert_eq!(back.to_json_string().unwrap(), s);
    assert_eq!(back.choice_vector(), vec![1, 2, 3, 1]);
    let tampered = s.replacen("\"choiceVector\": [\n    1", "\"choiceVector\": [\n    2", 1);
    assert_ne!(tampered, s);
    assert!(Resolution::from_json_str(&tampered).is_err());
}

#[test]
fn labels_agree_with_geometry() {
    for r in 1..=4 {
        let xi = build_xi(g(r, 4)).unwrap();
        let d = &xi.decomposition;
        for (cell, label) in d.cells().iter().zip(&xi.labels) {
            let pts: Vec<Vec<i64>> = cell.iter().map(|&v| d.vertices()[v].clone()).collect();
            assert_eq!(&ar_singularity::classify_cell(&xi.group, &pts).unwrap(), label);
        }
        assert!(xi.labels.iter().all(|l| l.cell_type() != CellType::FlopSimplex));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_choices_resolve(r in 1i64..=4, seed in any::<u64>()) {
        let xi = build_xi(g(r, 4)).unwrap();
        let axes: Vec<u8> = (0..xi.octahedra.len())
            .map(|i| 1 + ((seed >> (2 * (i % 32))) % 3) as u8)
            .collect();
        let res = Resolution::resolve(&xi, &FlopChoice::from_vector(&xi, &axes).unwrap()).unwrap();
        prop_assert!(res.decomposition.two_of_three_holds());
        prop_assert_eq!(res.decomposition.euler_number() as i64, (r + 1).pow(3));
        prop_assert_eq!(res.choice_vector(), axes);
    }
}
