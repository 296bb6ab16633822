//! Exit criteria, one PASS/FAIL line each. Runs without the test harness so
//! the lines always print; the process fails if any criterion does.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use a4_hilbert::charts::ChartContext;
use a4_hilbert::coinvariants::piece;
use a4_hilbert::invariants::z_ring;
use a4_hilbert::{
    central_ideals, chart, coinvariant_decomposition, pieces, verify_central_ideal, verify_chart, verify_discriminant,
    verify_eq_tri, verify_fxy, verify_inclusion_tree, verify_module_equalities, ChartName, Status,
};
use ar_singularity::{build_xi, ArGroup, CellLabel, CellType, FlopChoice, Resolution, XiStar};
use hilb_cli::commands::{emit_decomposition, ideal_rows, read_resolution};
use hilb_cli::export::{ideals_csv, parse_decomposition_csv, parse_ideals_csv, OffMesh};
use hilb_cli::{run_suite, Format, Suite, VerifyReport};
use ideal_calculus::{
    a1_catalog, block_catalog, cell_of_ideal, certify_colength_with, enumerate_central_ideals, ideal_of_cell,
    is_regular_quotient, GammaOutcome, IdealJson,
};
use symbolic_core::{buchberger, int, normal_form, Cyclotomic, ExponentVector, MonomialOrder, QPoly, Ring, SampleRng, Scalar};
use toric_lattice::Decomposition;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn g(r: i64) -> ArGroup {
    ArGroup::new(r, 4).unwrap()
}

fn star(r: i64) -> XiStar {
    XiStar::build(&build_xi(g(r)).unwrap()).unwrap()
}

fn mono(text: &str) -> Vec<i64> {
    let mut v = vec![0; 4];
    if text == "1" {
        return v;
    }
    for d in text.split('Z').filter(|s| !s.is_empty()) {
        v[d.parse::<usize>().unwrap() - 1] += 1;
    }
    v
}

/// Character of Z^e under A_r(4), as (e_i − e_4) mod (r+1), i = 1..3.
fn character(r: i64, e: &[i64]) -> [i64; 3] {
    let q = r + 1;
    [0, 1, 2].map(|i| (e[i] - e[3]).rem_euclid(q))
}

/// Complements of all monomial ideals with a regular quotient: order ideals
/// of size (r+1)³ in the box [0, r+1]⁴ meeting every character once.
fn brute_force_clusters(r: i64) -> BTreeSet<BTreeSet<Vec<i64>>> {
    let size = ((r + 1) as usize).pow(3);
    let mut cands = Vec::new();
    for a in 0..=r + 1 {
        for b in 0..=r + 1 {
            for c in 0..=r + 1 {
                for d in 0..=r + 1 {
                    cands.push(vec![a, b, c, d]);
                }
            }
        }
    }
    cands.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    let chars: Vec<[i64; 3]> = cands.iter().map(|v| character(r, v)).collect();
    struct State<'a> {
        size: usize,
        cands: &'a [Vec<i64>],
        chars: &'a [[i64; 3]],
        set: BTreeSet<Vec<i64>>,
        used: BTreeSet<[i64; 3]>,
        out: BTreeSet<BTreeSet<Vec<i64>>>,
    }
    fn go(s: &mut State, start: usize) {
        if s.set.len() == s.size {
            s.out.insert(s.set.clone());
            return;
        }
        for k in start..s.cands.len() {
            let v = &s.cands[k];
            if s.used.contains(&s.chars[k]) {
                continue;
            }
            let closed = (0..4).all(|i| {
                v[i] == 0 || {
                    let mut w = v.clone();
                    w[i] -= 1;
                    s.set.contains(&w)
                }
            });
            if !closed {
                continue;
            }
            s.set.insert(v.clone());
            s.used.insert(s.chars[k]);
            go(s, k + 1);
            s.set.remove(v);
            s.used.remove(&s.chars[k]);
        }
    }
    let mut s = State {
        size,
        cands: &cands,
        chars: &chars,
        set: BTreeSet::new(),
        used: BTreeSet::new(),
        out: BTreeSet::new(),
    };
    go(&mut s, 0);
    s.out
}

fn complements(r: i64) -> BTreeSet<BTreeSet<Vec<i64>>> {
    enumerate_central_ideals(&g(r))
        .unwrap()
        .iter()
        .map(|(_, j)| j.complement().unwrap().into_iter().collect())
        .collect()
}

const A1_TABLE: [(&str, &str); 12] = [
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

fn table_label(name: &str) -> CellLabel {
    let i: usize = name[1..2].parse().unwrap();
    match (name.as_bytes()[0], name.ends_with('\'')) {
        (b'D', _) => CellLabel::DeltaU {
            a: (1..=4).map(|k| (k == i) as i64).collect(),
        },
        (_, true) => CellLabel::Cp { a: vec![0; 4], i },
        (_, false) => CellLabel::C { a: vec![0; 4], i },
    }
}

fn census() -> Outcome {
    let ideals = enumerate_central_ideals(&g(1)).map_err(e)?;
    ensure(ideals.len() == 12, format!("{} ideals", ideals.len()))?;
    for (basis, name) in A1_TABLE {
        let want: BTreeSet<Vec<i64>> = basis.split(' ').map(mono).collect();
        let (s, _) = ideals
            .iter()
            .find(|(_, j)| j.complement().unwrap().into_iter().collect::<BTreeSet<_>>() == want)
            .ok_or_else(|| format!("row {name} has no ideal"))?;
        ensure(s.cell_label() == table_label(name), format!("row {name} matched {:?}", s.cell_label()))?;
    }
    let table: BTreeSet<BTreeSet<Vec<i64>>> =
        A1_TABLE.iter().map(|(b, _)| b.split(' ').map(mono).collect()).collect();
    ensure(table.len() == 12, "table rows are not distinct")?;
    ensure(complements(1) == table, "enumeration and table disagree")?;
    ensure(brute_force_clusters(1) == table, "brute force and table disagree")?;
    Ok("12 ideals, table rows matched with their cells, brute force agrees".into())
}

fn xi_star_certificate() -> Outcome {
    let st = star(1);
    let d = &st.decomposition;
    ensure(d.is_smooth().0, "Xi* is not smooth")?;
    let c = st.centers[0];
    ensure(d.canonical_divisor() == vec![(c, 1)], format!("K = {:?}", d.canonical_divisor()))?;
    ensure(d.euler_number() == 12, format!("chi = {}", d.euler_number()))?;
    let cells = d.star(c);
    ensure(cells.len() == 8, format!("star has {} cells", cells.len()))?;
    // link: the facet of each cell opposite the center
    let triangles: Vec<Vec<usize>> = cells
        .iter()
        .map(|&k| d.cells()[k].iter().copied().filter(|&v| v != c).collect())
        .collect();
    let vertices: BTreeSet<usize> = triangles.iter().flatten().copied().collect();
    let mut edges = BTreeSet::new();
    for t in &triangles {
        ensure(t.len() == 3, "link facet is not a triangle")?;
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    ensure(vertices.len() == 6 && edges.len() == 12, "link is not an octahedron boundary")?;
    for &(a, b) in &edges {
        let k = triangles.iter().filter(|t| t.contains(&a) && t.contains(&b)).count();
        ensure(k == 2, format!("edge ({a},{b}) in {k} triangles"))?;
    }
    for v in &vertices {
        ensure(edges.iter().filter(|(a, b)| a == v || b == v).count() == 4, "vertex degree is not 4")?;
    }
    let walls: Vec<(usize, usize)> = d
        .adjacent_pairs()
        .into_iter()
        .filter(|(a, b)| cells.contains(a) && cells.contains(b))
        .collect();
    ensure(walls.len() == 12, format!("{} walls", walls.len()))?;
    for (a, b) in walls {
        let k = d.fiber_normal_degree(a, b).map_err(e)?;
        ensure(k == -1, format!("wall ({a},{b}) has degree {k}"))?;
    }
    Ok("smooth, K = 1*c, chi = 12, octahedral link, 12 walls of degree -1".into())
}

fn flop_suite() -> Outcome {
    let xi = build_xi(g(1)).map_err(e)?;
    let mut all = Vec::new();
    for k in 1..=3u8 {
        let res = Resolution::resolve(&xi, &FlopChoice::uniform(&xi, k)).map_err(e)?;
        let d = &res.decomposition;
        let (s, c, chi) = (d.is_smooth().0, d.is_crepant().0, d.euler_number());
        ensure(s && c && chi == 8, format!("axis {k}: smooth {s}, integral {c}, chi {chi}"))?;
        ensure(d.two_of_three_holds(), "two-of-three violated")?;
        all.push(res);
    }
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let other = all[j].decomposition.cells();
            let only: Vec<usize> = (0..all[i].decomposition.cells().len())
                .filter(|&k| !other.contains(&all[i].decomposition.cells()[k]))
                .collect();
            ensure(only.len() == 4, format!("resolutions {i}, {j} differ in {} cells", only.len()))?;
            ensure(
                only.iter().all(|&k| all[i].labels[k].cell_type() == CellType::FlopSimplex),
                "a differing cell lies outside the octahedron",
            )?;
        }
    }
    Ok("three resolutions smooth, integral, chi = 8; pairwise 4 octahedron cells differ".into())
}

fn counts() -> Outcome {
    let mut rng = SampleRng::new(4);
    let mut resolutions = 0;
    for r in 1..=5i64 {
        let xi = build_xi(g(r)).map_err(e)?;
        let c = xi.classify_cells().map_err(e)?;
        let want = (
            ((r + 1) * (r + 2) * (r + 3) / 6) as usize,
            ((r - 1) * r * (r + 1) / 6) as usize,
            (r * (r + 1) * (r + 2) / 6) as usize,
        );
        ensure((c.delta_u, c.delta_d, c.octahedra) == want, format!("r = {r}: {c:?}"))?;
        ensure(c.delta_u + c.delta_d + 4 * c.octahedra == ((r + 1) as usize).pow(3), "sum identity")?;
        let st = XiStar::build(&xi).map_err(e)?;
        ensure(st.exceptional_divisors().len() == want.2, format!("r = {r}: divisor count"))?;
        let mut choices: Vec<FlopChoice> = (1..=3).map(|k| FlopChoice::uniform(&xi, k)).collect();
        for _ in 0..3 {
            let v: Vec<u8> = xi.octahedra.iter().map(|_| rng.int_in(1, 3) as u8).collect();
            choices.push(FlopChoice::from_vector(&xi, &v).map_err(e)?);
        }
        for ch in &choices {
            let d = Resolution::resolve(&xi, ch).map_err(e)?.decomposition;
            let ok = d.is_smooth().0 && d.is_crepant().0 && d.euler_number() == ((r + 1) as usize).pow(3);
            ensure(ok, format!("r = {r}: resolution not certified"))?;
            resolutions += 1;
        }
    }
    Ok(format!("r = 1..5 counts, sum identity, divisor counts (35 at r = 5), {resolutions} resolutions certified"))
}

fn bijection() -> Outcome {
    for r in 1..=3 {
        let st = star(r);
        let n = st.decomposition.cells().len();
        let ideals = enumerate_central_ideals(&g(r)).map_err(e)?;
        ensure(ideals.len() == n, format!("r = {r}: {} ideals for {n} cells", ideals.len()))?;
        for c in 0..n {
            let s = ideal_of_cell(&st, c).map_err(e)?;
            ensure(cell_of_ideal(&s, &st).map_err(e)? == c, format!("r = {r}: cell {c}"))?;
        }
        for (s, j) in &ideals {
            let c = cell_of_ideal(s, &st).map_err(e)?;
            ensure(ideal_of_cell(&st, c).map_err(e)? == *s, format!("r = {r}: staircase {:?}", s.l))?;
            ensure(is_regular_quotient(j, &g(r)).regular, format!("r = {r}: irregular quotient"))?;
        }
    }
    let brute = brute_force_clusters(2);
    ensure(brute.len() == 43, format!("brute force finds {} at r = 2", brute.len()))?;
    ensure(complements(2) == brute, "r = 2 enumeration and brute force disagree")?;
    Ok("r = 1..3 maps mutually inverse, all regular; r = 2 census 43 by brute force".into())
}

fn colength() -> Outcome {
    let mut runs = 0;
    for r in 1..=2 {
        let st = star(r);
        let mut seen = BTreeSet::new();
        for label in st.labels.iter().filter(|l| seen.insert(l.cell_type())) {
            let rep = certify_colength_with(r, label, 10, 17 + r as u64, true).map_err(e)?;
            let want = ((r + 1) as usize).pow(3);
            ensure(rep.colengths.len() == 10, "sample count")?;
            ensure(
                rep.pass && rep.colengths.iter().all(|k| *k == Some(want)),
                format!("r = {r}, {label:?}: {:?}", rep.colengths),
            )?;
            runs += 1;
        }
    }
    Ok(format!("{runs} chart types x 10 samples, colength (r+1)^3 in grlex and lex"))
}

fn gamma_catalog() -> Outcome {
    let mut entries = a1_catalog();
    for r in 1..=3 {
        entries.extend(block_catalog(r).map_err(e)?);
    }
    let mut off = Vec::new();
    let mut fixable = 0;
    for entry in &entries {
        let cert = entry.verify().map_err(e)?;
        match cert.outcome {
            GammaOutcome::Pass { .. } => {}
            GammaOutcome::Corrected { literal_residue, .. } => {
                fixable += 1;
                off.push(format!("{} [{}]: residue {literal_residue}", cert.name, cert.chart))
            }
            GammaOutcome::Fail { residue } => off.push(format!("{} [{}]: residue {residue}", cert.name, cert.chart)),
        }
    }
    if off.is_empty() {
        Ok(format!("{} identities with residue 0", entries.len()))
    } else {
        Err(format!(
            "{} of {} identities leave a nonzero residue as displayed ({fixable} hold after a recorded correction), e.g. {}",
            off.len(),
            entries.len(),
            off[0]
        ))
    }
}

fn a4_suite() -> Outcome {
    ensure(verify_eq_tri().map_err(e)?.passed(), "eqTri")?;
    ensure(verify_fxy().map_err(e)?.iter().all(|c| c.passed()), "fXY")?;
    ensure(verify_discriminant(3).map_err(e)?.passed(), "F3")?;
    ensure(verify_discriminant(4).map_err(e)?.passed(), "F4")?;
    for (order, name) in [(MonomialOrder::grlex(3), "grlex"), (MonomialOrder::lex(3), "lex")] {
        let rep = coinvariant_decomposition(order, name).map_err(e)?;
        ensure(rep.dims_by_degree == [1, 3, 5, 6, 5, 3] && rep.total == 23 && rep.pass(), format!("{name} dims"))?;
    }
    ensure(verify_inclusion_tree().map_err(e)?.iter().all(|c| c.passed()), "inclusion tree")?;
    ensure(verify_module_equalities().map_err(e)?.iter().all(|c| c.passed()), "module equalities")?;
    let ring = z_ring();
    let all = pieces(&ring);
    let central = central_ideals(&ring);
    ensure(central.len() == 4, "four central ideals")?;
    for c in &central {
        ensure(verify_central_ideal(c).map_err(e)?.iter().all(|k| k.passed()), format!("central {}", c.name))?;
        let dim: usize = c.quotient_decomposition.iter().map(|l| piece(&all, l).basis.len()).sum();
        ensure(dim == 12, format!("central {} quotient has dim {dim}", c.name))?;
    }
    let w = Cyclotomic::w() - &Cyclotomic::w2();
    let over = |k: i64| w.clone() * &Cyclotomic::from_ints(k, 0).inv().unwrap();
    let mut corrected = Vec::new();
    for name in ChartName::ALL {
        let ctx = ChartContext::new(chart(name)).map_err(e)?;
        let k = if matches!(name, ChartName::X0 | ChartName::X0Prime) { 12 } else { 36 };
        let want = if name.is_primed() { Cyclotomic::from_ints(0, 0) - &over(k) } else { over(k) };
        ensure(ctx.volume == want, format!("{}: volume constant {}", ctx.id(), ctx.volume))?;
        let rep = verify_chart(name, 7).map_err(e)?;
        let closure = rep
            .checks
            .iter()
            .find(|c| c.name.ends_with("solved parameters satisfy the invariant relation"))
            .ok_or("closure check missing")?;
        ensure(closure.passed(), format!("{}: closure", ctx.id()))?;
        if closure.status == Status::Corrected {
            corrected.push(ctx.id().to_string());
        }
        let vol = rep.checks.iter().find(|c| c.name.contains(": dZ = ")).ok_or("volume check missing")?;
        ensure(vol.status == Status::Pass && vol.samples.len() >= 5, format!("{}: Jacobian", ctx.id()))?;
    }
    Ok(format!(
        "identities, dims [1,3,5,6,5,3], tree, 4 central ideals of dim 12, chart closures and Jacobians at 5 points{}",
        if corrected.is_empty() {
            String::new()
        } else {
            format!(" (closure read with primed parameters in {})", corrected.join(", "))
        }
    ))
}

fn inverse_law(d: &Decomposition) -> Result<usize, String> {
    let pairs = d.adjacent_pairs();
    for &(a, b) in &pairs {
        let (ca, cb) = (d.chart_basis(a).map_err(e)?, d.chart_basis(b).map_err(e)?);
        let t = d.chart_transition(&ca, &cb).map_err(e)?;
        let u = d.chart_transition(&cb, &ca).map_err(e)?;
        let n = t.len();
        for i in 0..n {
            for j in 0..n {
                let x: i64 = (0..n).map(|k| t[i][k] * u[k][j]).sum();
                ensure(x == (i == j) as i64, format!("T_ab T_ba != I for cells ({a},{b})"))?;
            }
        }
    }
    Ok(pairs.len())
}

fn random_poly(rng: &mut SampleRng, ring: &symbolic_core::RingRef, terms: usize, deg: i64) -> QPoly {
    QPoly::from_terms(
        ring,
        (0..terms).map(|_| {
            let ev = ExponentVector((0..3).map(|_| rng.int_in(0, deg) as i32).collect());
            (ev, int(rng.int_in(-5, 5)))
        }),
    )
}

fn properties() -> Outcome {
    // two-of-three on every decomposition built here
    let mut decs: Vec<Decomposition> = Vec::new();
    for (r, n) in [(1, 2), (1, 3), (1, 5)] {
        decs.push(build_xi(ArGroup::new(r, n).unwrap()).map_err(e)?.decomposition);
    }
    let mut smooth = Vec::new();
    for r in 1..=4 {
        let xi = build_xi(g(r)).map_err(e)?;
        decs.push(xi.decomposition.clone());
        smooth.push(XiStar::build(&xi).map_err(e)?.decomposition);
        for k in 1..=3 {
            smooth.push(Resolution::resolve(&xi, &FlopChoice::uniform(&xi, k)).map_err(e)?.decomposition);
        }
    }
    let xi2 = build_xi(g(2)).map_err(e)?;
    for ch in FlopChoice::all(&xi2) {
        decs.push(Resolution::resolve(&xi2, &ch).map_err(e)?.decomposition);
    }
    decs.extend(smooth.iter().cloned());
    for (k, d) in decs.iter().enumerate() {
        ensure(d.two_of_three_holds(), format!("two-of-three fails on decomposition {k}"))?;
    }
    let mut pairs = 0;
    for d in &smooth {
        pairs += inverse_law(d)?;
    }
    // normal forms are idempotent and kill the ideal
    let ring = Ring::new(&["x", "y", "z"]);
    let mut rng = SampleRng::new(99);
    for order in [MonomialOrder::grlex(3), MonomialOrder::lex(3)] {
        for _ in 0..6 {
            let gens: Vec<QPoly> = (0..3).map(|_| random_poly(&mut rng, &ring, 3, 2)).filter(|p| !p.is_zero()).collect();
            if gens.is_empty() {
                continue;
            }
            let gb = buchberger(&gens, &order).map_err(e)?;
            for _ in 0..5 {
                let f = random_poly(&mut rng, &ring, 5, 4);
                let once = normal_form(&f, &gb, &order).map_err(e)?;
                ensure(normal_form(&once, &gb, &order).map_err(e)? == once, "normalForm is not idempotent")?;
            }
            for p in &gens {
                ensure(normal_form(p, &gb, &order).map_err(e)?.is_zero(), "generator not reduced to 0")?;
            }
        }
    }
    // every file form re-emits bit-exactly
    let xi1 = build_xi(g(1)).map_err(e)?;
    let res = Resolution::resolve(&xi2, &FlopChoice::all(&xi2)[40]).map_err(e)?;
    let v = res.choice_vector();
    for fmt in [Format::Json, Format::Csv] {
        let text = emit_decomposition(&res.decomposition, Some(&v), fmt).map_err(e)?;
        let back = read_resolution(&text).map_err(e)?;
        ensure(emit_decomposition(&back.decomposition, Some(&back.choice_vector()), fmt).map_err(e)? == text, "resolution")?;
    }
    for d in [&xi1.decomposition, &smooth[0]] {
        let json = emit_decomposition(d, None, Format::Json).map_err(e)?;
        let back = Decomposition::from_json_str(&json).map_err(e)?;
        ensure(back == *d && emit_decomposition(&back, None, Format::Json).map_err(e)? == json, "decomposition JSON")?;
        let csv = emit_decomposition(d, None, Format::Csv).map_err(e)?;
        let (j, choice) = parse_decomposition_csv(&csv).map_err(e)?;
        ensure(choice.is_none() && j.to_decomposition().map_err(e)? == *d, "decomposition CSV")?;
        let off = OffMesh::whole(d).map_err(e)?;
        ensure(OffMesh::parse(&off.emit()).map_err(e)? == off, "OFF")?;
    }
    let rows = ideal_rows(2).map_err(e)?;
    let csv = ideals_csv(&rows).map_err(e)?;
    ensure(parse_ideals_csv(&csv).map_err(e)? == rows, "ideals CSV")?;
    for row in &rows {
        let text = row.ideal.to_string_pretty();
        ensure(IdealJson::from_str(&text).map_err(e)? == row.ideal, "ideal JSON")?;
        row.ideal.to_staircase().map_err(e)?;
    }
    let report = run_suite(Suite::A1, 1, 3).map_err(e)?;
    ensure(VerifyReport::from_json(&report.to_json()).map_err(e)? == report, "report JSON")?;
    Ok(format!(
        "two-of-three on {} decompositions, {pairs} adjacent chart pairs invert, normal forms idempotent, files round-trip",
        decs.len()
    ))
}

fn main() {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 9] = [
        (1, "A1(4) ideal census", Duration::from_secs(1), census),
        (2, "Xi* certification", Duration::from_secs(1), xi_star_certificate),
        (3, "flop suite", Duration::from_secs(1), flop_suite),
        (4, "general-r counts", Duration::from_secs(30), counts),
        (5, "staircase and cell bijection", Duration::from_secs(60), bijection),
        (6, "Groebner colength", Duration::from_secs(120), colength),
        (7, "gamma-relation catalog", Duration::from_secs(30), gamma_catalog),
        (8, "A4 identity suite", Duration::from_secs(120), a4_suite),
        (9, "property suite", Duration::from_secs(30), properties),
    ];
    let mut failed = 0;
    for (k, title, limit, run) in criteria {
        let t = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = t.elapsed();
        let result = result.and_then(|msg| {
            if took < limit {
                Ok(msg)
            } else {
                Err(format!("took {took:.2?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(msg) => println!("PASS criterion {k} ({title}): {msg} [{took:.2?} < {limit:?}]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {k} ({title}): {msg} [{took:.2?}]");
            }
        }
    }
    println!("{} of 9 criteria pass", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
