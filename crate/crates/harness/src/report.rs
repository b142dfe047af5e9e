//! Machine-readable output: the JSON envelope and CSV tables.

use closurelab_core::basesize::BaseRecord;
use closurelab_core::closure::ClosureReport;
use closurelab_core::ActionInstance;
use num_bigint::BigUint;
use serde::Serialize;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct GroupInfo {
    pub name: String,
    pub degree: usize,
    #[serde(serialize_with = "closurelab_core::bignum::serialize")]
    pub order: BigUint,
}

#[derive(Debug, Serialize)]
pub struct ActionInfo {
    pub provenance: String,
    pub degree: usize,
}

#[derive(Debug, Serialize)]
pub struct BudgetInfo {
    pub nodes_used: u64,
    /// Wall time, present only when timings were requested.
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub tool_version: &'static str,
    pub command: String,
    pub group: Option<GroupInfo>,
    pub action: Option<ActionInfo>,
    pub result: serde_json::Value,
    pub budget: BudgetInfo,
}

impl Report {
    /// `base` is the group as given; `action` is what it acts on.
    pub fn new(command: &str, base: Option<&ActionInstance>, action: Option<&ActionInstance>, result: serde_json::Value) -> Self {
        Report {
            tool_version: TOOL_VERSION,
            command: command.to_string(),
            group: base.map(|b| GroupInfo {
                name: b.name.clone(),
                degree: b.degree(),
                order: b.source_order.clone(),
            }),
            action: action.map(|a| ActionInfo {
                provenance: a.provenance.to_string(),
                degree: a.degree(),
            }),
            result,
            budget: BudgetInfo { nodes_used: 0, elapsed_ms: None },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// An exact integer as JSON: a number up to 2^53, a decimal string above.
pub fn integer(v: &BigUint) -> serde_json::Value {
    serde_json::to_value(Exact(v)).expect("integer serializes")
}

struct Exact<'a>(&'a BigUint);

impl Serialize for Exact<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        closurelab_core::bignum::serialize(self.0, s)
    }
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}

/// One row per base record: `group,action,degree,b,exhaustive`.
pub fn base_csv(rows: &[(&ActionInstance, &BaseRecord)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["group", "action", "degree", "b", "exhaustive"]).unwrap();
    for (a, rec) in rows {
        w.write_record([
            a.name.clone(),
            a.provenance.to_string(),
            a.degree().to_string(),
            rec.size.to_string(),
            rec.exhaustive.to_string(),
        ])
        .unwrap();
    }
    finish(w)
}

/// One row per spectrum entry: `group,action,k,order,closed`.
pub fn spectrum_csv(a: &ActionInstance, report: &ClosureReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["group", "action", "k", "order", "closed"]).unwrap();
    for e in &report.entries {
        w.write_record([
            a.name.clone(),
            a.provenance.to_string(),
            e.k.to_string(),
            e.order.to_string(),
            (e.order == report.group_order).to_string(),
        ])
        .unwrap();
    }
    finish(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use closurelab_core::basesize::exact_base_size;
    use closurelab_core::catalog::by_name;
    use closurelab_core::closure::closure_spectrum;
    use closurelab_core::Budget;

    #[test]
    fn csv_tables() {
        let a5 = by_name("A5").unwrap();
        let rec = exact_base_size(&a5, &Budget::UNLIMITED, 1).unwrap();
        assert_eq!(base_csv(&[(&a5, &rec)]), "group,action,degree,b,exhaustive\nA5,natural,5,3,true\n");
        let spec = closure_spectrum(&a5, None, &Budget::UNLIMITED).unwrap();
        let text = spectrum_csv(&a5, &spec);
        assert_eq!(text.lines().count(), 5);
        assert_eq!(text.lines().last(), Some("A5,natural,4,60,true"));
    }

    #[test]
    fn large_orders_are_strings() {
        let m24 = by_name("M24").unwrap();
        let r = Report::new("order", Some(&m24), Some(&m24), serde_json::Value::Null);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["group"]["order"], 244823040);
        let huge = by_name("S30").unwrap();
        let r = Report::new("order", Some(&huge), None, serde_json::Value::Null);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["group"]["order"], "265252859812191058636308480000000");
        assert!(v["budget"]["elapsed_ms"].is_null());
    }
}
