//! The verification suites behind `hilb verify`.
//!
//! Every check is named `<suite>: <what>`; construction errors become failed
//! checks rather than aborting the run.

use std::collections::BTreeSet;

use ar_singularity::{build_xi, ArGroup, FlopChoice, Resolution, Xi, XiStar};
use ideal_calculus::{
    a1_catalog, block_catalog, cell_of_ideal, certify_colength_with, enumerate_central_ideals, ideal_of_cell,
    is_regular_quotient, Certificate, GammaOutcome,
};
use symbolic_core::SampleRng;
use toric_lattice::Decomposition;

use crate::report::{CheckStatus, SuiteCheck, VerifyReport};
use crate::{label_name, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    A1,
    Ar,
    A4,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "a1-4" => Some(Suite::A1),
            "ar-4" => Some(Suite::Ar),
            "a4" => Some(Suite::A4),
            "all" => Some(Suite::All),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::A1 => "a1-4",
            Suite::Ar => "ar-4",
            Suite::A4 => "a4",
            Suite::All => "all",
        }
    }
}

/// Complement bases of the twelve central ideals of A₁(4), with the cell each
/// one belongs to (`D_i` is Δ_u at e_i).
pub const A1_TABLE: [(&str, &str); 12] = [
    ("1 Z2 Z3 Z4 Z2Z3 Z2Z4 Z3Z4 Z2Z3Z4", "Du(1,0,0,0)"),
    ("1 Z1 Z3 Z4 Z1Z4 Z1Z3 Z3Z4 Z1Z3Z4", "Du(0,1,0,0)"),
    ("1 Z1 Z2 Z4 Z1Z4 Z2Z4 Z1Z2 Z1Z2Z4", "Du(0,0,1,0)"),
    ("1 Z1 Z2 Z3 Z2Z3 Z1Z3 Z1Z2 Z1Z2Z3", "Du(0,0,0,1)"),
    ("1 Z1 Z2 Z3 Z4 Z2Z3 Z2Z4 Z3Z4", "C1(0,0,0,0)"),
    ("1 Z1 Z2 Z3 Z4 Z1Z4 Z1Z3 Z3Z4", "C2(0,0,0,0)"),
    ("1 Z1 Z2 Z3 Z4 Z1Z4 Z2Z4 Z1Z2", "C3(0,0,0,0)"),
    ("1 Z1 Z2 Z3 Z4 Z2Z3 Z1Z3 Z1Z2", "C4(0,0,0,0)"),
    ("1 Z1 Z2 Z3 Z4 Z1Z4 Z1Z3 Z1Z2", "C1'(0,0,0,0)"),
    ("1 Z1 Z2 Z3 Z4 Z2Z3 Z2Z4 Z1Z2", "C2'(0,0,0,0)"),
    ("1 Z1 Z2 Z3 Z4 Z2Z3 Z1Z3 Z3Z4", "C3'(0,0,0,0)"),
    ("1 Z1 Z2 Z3 Z4 Z1Z4 Z2Z4 Z3Z4", "C4'(0,0,0,0)"),
];

/// "Z1Z3Z4" → [1,0,1,1], "1" → 0.
pub fn parse_monomial(text: &str) -> Option<Vec<i64>> {
    let mut e = vec![0; 4];
    if text == "1" {
        return Some(e);
    }
    for d in text.split('Z') {
        if d.is_empty() {
            continue;
        }
        let i: usize = d.parse().ok()?;
        *e.get_mut(i.checked_sub(1)?)? += 1;
    }
    Some(e)
}

/// Samples per chart type in the colength checks.
pub const COLENGTH_SAMPLES: usize = 10;

pub fn run_suite(suite: Suite, r: i64, seed: u64) -> Result<VerifyReport, CliError> {
    let checks = match suite {
        Suite::A1 => a1_checks(seed),
        Suite::Ar => ar_checks(r, seed)?,
        Suite::A4 => a4_checks(seed),
        Suite::All => {
            let mut v = a1_checks(seed);
            v.extend(ar_checks(r, seed)?);
            v.extend(a4_checks(seed));
            v
        }
    };
    let r = matches!(suite, Suite::Ar | Suite::All).then_some(r);
    Ok(VerifyReport::new(suite.name(), r, seed, checks))
}

/// Runs `f`, turning an error into one failed check named `name`.
fn guarded(name: &str, f: impl FnOnce() -> Result<Vec<SuiteCheck>, CliError>) -> Vec<SuiteCheck> {
    f().unwrap_or_else(|e| vec![SuiteCheck::fail(name, e.to_string())])
}

fn xi_and_star(r: i64) -> Result<(Xi, XiStar), CliError> {
    let xi = build_xi(ArGroup::new(r, 4)?)?;
    let star = XiStar::build(&xi)?;
    Ok((xi, star))
}

pub fn certificate_check(prefix: &str, c: &Certificate) -> SuiteCheck {
    let name = format!("{prefix}: gamma {} {}", c.chart, c.name);
    match &c.outcome {
        GammaOutcome::Pass { rung } => SuiteCheck::with_status(name, CheckStatus::Pass, Some(format!("{rung:?}"))),
        GammaOutcome::Corrected { rung, literal_residue } => SuiteCheck::with_status(
            name,
            CheckStatus::Corrected,
            Some(format!("literal residue {literal_residue}; corrected form by {rung:?}")),
        ),
        GammaOutcome::Fail { residue } => SuiteCheck::fail(name, format!("residue {residue}")),
    }
}

fn a1_checks(seed: u64) -> Vec<SuiteCheck> {
    let p = "a1-4";
    let mut out = guarded("a1-4: census", || census_checks(p));
    out.extend(guarded("a1-4: Xi*", || star_checks(p, 1)));
    out.extend(guarded("a1-4: resolutions", || a1_resolution_checks(p)));
    out.extend(guarded("a1-4: gamma catalog", || {
        a1_catalog()
            .iter()
            .map(|e| Ok(certificate_check(p, &e.verify()?)))
            .collect()
    }));
    out.extend(guarded("a1-4: colength", || colength_checks(p, 1, seed)));
    out
}

fn census_checks(p: &str) -> Result<Vec<SuiteCheck>, CliError> {
    let (_, star) = xi_and_star(1)?;
    let ideals = enumerate_central_ideals(&ArGroup::new(1, 4)?)?;
    let mut out = vec![SuiteCheck::of(
        format!("{p}: twelve central ideals"),
        ideals.len() == 12,
        format!("{} found", ideals.len()),
    )];
    for (row, (basis, cell)) in A1_TABLE.iter().enumerate() {
        let want: BTreeSet<Vec<i64>> = basis.split(' ').filter_map(parse_monomial).collect();
        let found = ideals
            .iter()
            .find(|(_, j)| j.complement().map(|c| c.into_iter().collect::<BTreeSet<_>>()) == Some(want.clone()));
        let name = format!("{p}: table row {:02} {cell}", row + 1);
        out.push(match found {
            None => SuiteCheck::fail(name, "no enumerated ideal has this complement"),
            Some((s, _)) => {
                let label = s.cell_label();
                let in_star = star.cell_of(&label).is_some();
                SuiteCheck::of(
                    name,
                    label_name(&label) == *cell && in_star,
                    format!("matched {}", label_name(&label)),
                )
            }
        });
    }
    Ok(out)
}

fn star_checks(p: &str, r: i64) -> Result<Vec<SuiteCheck>, CliError> {
    let (xi, star) = xi_and_star(r)?;
    let d = &star.decomposition;
    let mut out = Vec::new();
    let (smooth, bad) = d.is_smooth();
    out.push(SuiteCheck::of(format!("{p}: Xi* is smooth"), smooth, format!("non-unimodular cells {bad:?}")));
    let want: Vec<(usize, i64)> = {
        let mut v: Vec<_> = star.centers.iter().map(|&c| (c, 1)).collect();
        v.sort();
        v
    };
    let mut got = d.canonical_divisor();
    got.sort();
    out.push(SuiteCheck::of(
        format!("{p}: Xi* canonical divisor is the sum of the centers"),
        got == want,
        format!("{got:?}"),
    ));
    let chi = (r + 1).pow(3) as usize + 4 * xi.octahedra.len();
    out.push(SuiteCheck::of(
        format!("{p}: Xi* Euler number"),
        d.euler_number() == chi,
        format!("{} (want {chi})", d.euler_number()),
    ));
    let divisors = star.exceptional_divisors();
    let m = (r * (r + 1) * (r + 2) / 6) as usize;
    out.push(SuiteCheck::of(
        format!("{p}: exceptional divisor count"),
        divisors.len() == m,
        format!("{} (want {m})", divisors.len()),
    ));
    let mut cube_ok = true;
    for e in &divisors {
        let degrees_ok = e
            .link_vertices
            .iter()
            .all(|v| e.link_edges.iter().filter(|(x, y)| x == v || y == v).count() == 4);
        let edges_ok = e
            .link_edges
            .iter()
            .all(|(x, y)| e.link_triangles.iter().filter(|t| t.contains(x) && t.contains(y)).count() == 2);
        cube_ok &= e.cells.len() == 8
            && e.link_vertices.len() == 6
            && e.link_edges.len() == 12
            && e.link_triangles.len() == 8
            && degrees_ok
            && edges_ok;
    }
    out.push(SuiteCheck::of(
        format!("{p}: each divisor star is 8 cells over an octahedron boundary"),
        cube_ok,
        format!("{} stars", divisors.len()),
    ));
    let pairs = d.adjacent_pairs();
    let mut walls = 0;
    let mut degrees = BTreeSet::new();
    for &c in &star.centers {
        let s = d.star(c);
        for &(x, y) in pairs.iter().filter(|(x, y)| s.contains(x) && s.contains(y)) {
            walls += 1;
            degrees.insert(d.fiber_normal_degree(x, y)?);
        }
    }
    out.push(SuiteCheck::of(
        format!("{p}: twelve walls per divisor, all of normal degree -1"),
        walls == 12 * divisors.len() && degrees.iter().all(|&k| k == -1),
        format!("{walls} walls, degrees {degrees:?}"),
    ));
    out.push(transition_check(p, "Xi*", d)?);
    if r <= 5 {
        out.extend(bijection_checks(p, r, &star)?);
    }
    Ok(out)
}

/// T_ab · T_ba = I for every adjacent pair of charts.
pub fn transition_inverse_law(d: &Decomposition) -> Result<(usize, usize), CliError> {
    let (mut ok, mut total) = (0, 0);
    for (a, b) in d.adjacent_pairs() {
        let (ca, cb) = (d.chart_basis(a)?, d.chart_basis(b)?);
        let ab = d.chart_transition(&ca, &cb)?;
        let ba = d.chart_transition(&cb, &ca)?;
        let n = ab.len();
        let identity = (0..n).all(|i| {
            (0..n).all(|j| (0..n).map(|k| ab[i][k] * ba[k][j]).sum::<i64>() == (i == j) as i64)
        });
        total += 1;
        ok += identity as usize;
    }
    Ok((ok, total))
}

fn transition_check(p: &str, what: &str, d: &Decomposition) -> Result<SuiteCheck, CliError> {
    let (ok, total) = transition_inverse_law(d)?;
    Ok(SuiteCheck::of(
        format!("{p}: {what} chart transitions invert on adjacent pairs"),
        ok == total,
        format!("{ok}/{total}"),
    ))
}

fn bijection_checks(p: &str, r: i64, star: &XiStar) -> Result<Vec<SuiteCheck>, CliError> {
    let g = ArGroup::new(r, 4)?;
    let ideals = enumerate_central_ideals(&g)?;
    let cells = star.decomposition.cells().len();
    let mut hit = vec![false; cells];
    let mut ideal_to_cell = true;
    let mut regular = true;
    for (s, j) in &ideals {
        regular &= is_regular_quotient(j, &g).regular;
        let c = cell_of_ideal(s, star)?;
        ideal_to_cell &= ideal_of_cell(star, c)? == *s;
        hit[c] = true;
    }
    let mut cell_to_ideal = true;
    for c in 0..cells {
        cell_to_ideal &= cell_of_ideal(&ideal_of_cell(star, c)?, star)? == c;
    }
    Ok(vec![
        SuiteCheck::of(
            format!("{p}: one central ideal per cell of Xi*"),
            ideals.len() == cells && hit.iter().all(|&h| h),
            format!("{} ideals, {cells} cells", ideals.len()),
        ),
        SuiteCheck::of(
            format!("{p}: cell and staircase maps are mutually inverse"),
            ideal_to_cell && cell_to_ideal,
            format!("ideal->cell->ideal {ideal_to_cell}, cell->ideal->cell {cell_to_ideal}"),
        ),
        SuiteCheck::of(
            format!("{p}: every central ideal has a regular quotient"),
            regular,
            format!("{} ideals", ideals.len()),
        ),
    ])
}

fn resolution_check(p: &str, tag: &str, res: &Resolution, group_order: usize) -> SuiteCheck {
    let d = &res.decomposition;
    let smooth = d.is_smooth().0;
    let crepant = d.is_crepant().0;
    let chi = d.euler_number();
    SuiteCheck::of(
        format!("{p}: resolution {tag} smooth, crepant, chi = |G|"),
        smooth && crepant && chi == group_order && d.two_of_three_holds(),
        format!("smooth {smooth}, crepant {crepant}, chi {chi}"),
    )
}

fn choice_tag(res: &Resolution) -> String {
    res.choice_vector().iter().map(|k| k.to_string()).collect()
}

fn a1_resolution_checks(p: &str) -> Result<Vec<SuiteCheck>, CliError> {
    let xi = build_xi(ArGroup::new(1, 4)?)?;
    let mut out = Vec::new();
    let all: Vec<Resolution> = (1..=3u8)
        .map(|k| Resolution::resolve(&xi, &FlopChoice::uniform(&xi, k)))
        .collect::<Result<_, _>>()?;
    for res in &all {
        out.push(resolution_check(p, &choice_tag(res), res, 8));
        out.push(transition_check(p, &format!("resolution {}", choice_tag(res)), &res.decomposition)?);
    }
    let mut diffs = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let theirs = all[j].decomposition.cells();
            diffs.push(all[i].decomposition.cells().iter().filter(|c| !theirs.contains(c)).count());
        }
    }
    out.push(SuiteCheck::of(
        format!("{p}: the three resolutions differ pairwise in 4 cells"),
        diffs.iter().all(|&k| k == 4),
        format!("{diffs:?}"),
    ));
    let center = xi.octahedra[0].center.clone();
    let flopped = all[0].flop(&center, 2)?;
    let back = flopped.flop(&center, 1)?;
    out.push(SuiteCheck::of(
        format!("{p}: flop along axis 2 gives the second resolution and flops back"),
        flopped.decomposition == all[1].decomposition && back.decomposition == all[0].decomposition,
        "axis 1 -> 2 -> 1",
    ));
    Ok(out)
}

/// One label per chart type present in Ξ*.
fn representative_labels(star: &XiStar) -> Vec<ar_singularity::CellLabel> {
    let mut seen = BTreeSet::new();
    star.labels.iter().filter(|l| seen.insert(l.cell_type())).cloned().collect()
}

fn colength_checks(p: &str, r: i64, seed: u64) -> Result<Vec<SuiteCheck>, CliError> {
    let (_, star) = xi_and_star(r)?;
    let mut out = Vec::new();
    for (k, label) in representative_labels(&star).iter().enumerate() {
        let rep = certify_colength_with(r, label, COLENGTH_SAMPLES, seed.wrapping_add(k as u64), true)?;
        out.push(SuiteCheck::of(
            format!("{p}: colength {} in chart {}", rep.expected, label_name(label)),
            rep.pass,
            format!(
                "{} samples at colengths [{}], grlex and lex",
                rep.samples.len(),
                rep.colengths
                    .iter()
                    .map(|k| k.map_or("inf".to_string(), |k| k.to_string()))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        ));
    }
    Ok(out)
}

fn ar_checks(r: i64, seed: u64) -> Result<Vec<SuiteCheck>, CliError> {
    let g = ArGroup::new(r, 4)?;
    let p = format!("ar-4 r={r}");
    let p = p.as_str();
    let mut out = guarded(&format!("{p}: counts"), || {
        let xi = build_xi(g)?;
        let counts = xi.classify_cells()?;
        let want = g.expected_counts();
        let cube = (r + 1).pow(3) as usize;
        Ok(vec![
            SuiteCheck::of(format!("{p}: cell type counts"), counts == want, format!("{counts:?}")),
            SuiteCheck::of(
                format!("{p}: Du + Dd + 4 Oct = (r+1)^3"),
                counts.delta_u + counts.delta_d + 4 * counts.octahedra == cube,
                format!("{} + {} + 4*{} vs {cube}", counts.delta_u, counts.delta_d, counts.octahedra),
            ),
        ])
    });
    out.extend(guarded(&format!("{p}: Xi*"), || star_checks(p, r)));
    out.extend(guarded(&format!("{p}: resolutions"), || resolution_family_checks(p, g, seed)));
    if r <= 3 {
        out.extend(guarded(&format!("{p}: colength"), || colength_checks(p, r, seed)));
        out.extend(guarded(&format!("{p}: gamma blocks"), || {
            block_catalog(r)?
                .iter()
                .map(|e| Ok(certificate_check(p, &e.verify()?)))
                .collect()
        }));
    }
    Ok(out)
}

fn random_choice(xi: &Xi, rng: &mut SampleRng) -> Result<FlopChoice, CliError> {
    let v: Vec<u8> = xi.octahedra.iter().map(|_| rng.int_in(1, 3) as u8).collect();
    Ok(FlopChoice::from_vector(xi, &v)?)
}

fn resolution_family_checks(p: &str, g: ArGroup, seed: u64) -> Result<Vec<SuiteCheck>, CliError> {
    let xi = build_xi(g)?;
    let order = g.order();
    let mut rng = SampleRng::new(seed);
    let mut choices: Vec<FlopChoice> = (1..=3u8).map(|k| FlopChoice::uniform(&xi, k)).collect();
    for _ in 0..3 {
        choices.push(random_choice(&xi, &mut rng)?);
    }
    let mut out = Vec::new();
    for (k, choice) in choices.iter().enumerate() {
        let tag = if k < 3 { format!("uniform {}", k + 1) } else { format!("random {}", k - 2) };
        out.push(match Resolution::resolve(&xi, choice) {
            Ok(res) => resolution_check(p, &tag, &res, order),
            Err(e) => SuiteCheck::fail(format!("{p}: resolution {tag} smooth, crepant, chi = |G|"), e.to_string()),
        });
    }
    if !xi.octahedra.is_empty() {
        let mut res = Resolution::resolve(&xi, &random_choice(&xi, &mut rng)?)?;
        let mut ok = true;
        for _ in 0..10 {
            let o = &xi.octahedra[rng.int_in(0, xi.octahedra.len() as i64 - 1) as usize];
            let current = res.choice.per_octahedron[&o.center];
            let step = rng.int_in(1, 2) as u8;
            let axis = (current - 1 + step) % 3 + 1;
            res = res.flop(&o.center, axis)?;
            let d = &res.decomposition;
            ok &= d.is_smooth().0 && d.is_crepant().0 && d.euler_number() == order;
        }
        out.push(SuiteCheck::of(
            format!("{p}: random walk of 10 flops stays certified"),
            ok,
            format!("ends at {}", choice_tag(&res)),
        ));
    }
    Ok(out)
}

fn a4_checks(seed: u64) -> Vec<SuiteCheck> {
    match a4_hilbert::run_suite(seed) {
        Ok(rep) => rep
            .checks
            .into_iter()
            .map(|c| {
                let status = match c.status {
                    a4_hilbert::Status::Pass => CheckStatus::Pass,
                    a4_hilbert::Status::Corrected => CheckStatus::Corrected,
                    a4_hilbert::Status::Fail => CheckStatus::Fail,
                };
                let detail = match (c.residue, c.note) {
                    (None, None) => None,
                    (Some(r), None) => Some(format!("residue {r}")),
                    (None, Some(n)) => Some(n),
                    (Some(r), Some(n)) => Some(format!("{n}; literal residue {r}")),
                };
                SuiteCheck::with_status(format!("a4: {}", c.name), status, detail)
            })
            .collect(),
        Err(e) => vec![SuiteCheck::fail("a4: suite", e.to_string())],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_and_suite_names() {
        assert_eq!(parse_monomial("1"), Some(vec![0; 4]));
        assert_eq!(parse_monomial("Z1Z3Z4"), Some(vec![1, 0, 1, 1]));
        assert_eq!(parse_monomial("Z5"), None);
        assert_eq!(parse_monomial("Z0"), None);
        for s in [Suite::A1, Suite::Ar, Suite::A4, Suite::All] {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("a2"), None);
    }

    #[test]
    fn construction_errors_become_failed_checks() {
        let out = guarded("x: thing", || Err(CliError::Failed("boom".into())));
        assert_eq!(out, vec![SuiteCheck::fail("x: thing", "boom")]);
    }
}
