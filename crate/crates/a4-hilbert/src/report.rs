//! Everything at once, as one list of named checks.

use serde::Serialize;
use symbolic_core::MonomialOrder;

use crate::central::{central_ideals, verify_central_ideal};
use crate::charts::{verify_chart, verify_conjugate_pair, verify_global_volume_form, ChartName};
use crate::coinvariants::coinvariant_decomposition;
use crate::group::GroupRepresentation;
use crate::invariants::{
    verify_discriminant, verify_eq_tri, verify_fxy, verify_invariants, verify_invariants_on_hyperplane, z_ring,
};
use crate::tree::{verify_inclusion_tree, verify_module_equalities};
use crate::{A4Error, Check, Status};

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub seed: u64,
    pub passed: usize,
    pub corrected: usize,
    pub failed: usize,
    /// sorted by name
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn run_suite(seed: u64) -> Result<SuiteReport, A4Error> {
    let mut checks = Vec::new();
    let g = GroupRepresentation::new();
    checks.push(match g.check_presentation() {
        Ok(()) => Check::pass("group: presentation"),
        Err(e) => Check::fail("group: presentation", e),
    });
    checks.push(match g.check_characters() {
        Ok(()) => Check::pass("group: character table"),
        Err(e) => Check::fail("group: character table", e),
    });
    checks.push(verify_invariants()?);
    checks.push(verify_eq_tri()?);
    checks.extend(verify_fxy()?);
    checks.push(verify_discriminant(3)?);
    checks.push(verify_discriminant(4)?);
    checks.extend(verify_invariants_on_hyperplane()?);
    for (order, name) in [(MonomialOrder::grlex(3), "grlex"), (MonomialOrder::lex(3), "lex")] {
        let r = coinvariant_decomposition(order, name)?;
        checks.push(Check::from_bool(
            format!("coinvariants ({name})"),
            r.pass(),
            format!("dims {:?}, joint rank {}", r.dims_by_degree, r.joint_rank),
        ));
    }
    checks.extend(verify_inclusion_tree()?);
    checks.extend(verify_module_equalities()?);
    for c in central_ideals(&z_ring()) {
        checks.extend(verify_central_ideal(&c)?);
    }
    for name in ChartName::ALL {
        checks.extend(verify_chart(name, seed)?.checks);
    }
    checks.extend(verify_conjugate_pair(ChartName::X0)?);
    checks.extend(verify_conjugate_pair(ChartName::XInf)?);
    checks.extend(verify_global_volume_form(seed)?);
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    Ok(SuiteReport {
        seed,
        passed: count(Status::Pass),
        corrected: count(Status::Corrected),
        failed: count(Status::Fail),
        checks,
    })
}
