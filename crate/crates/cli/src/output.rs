//! Output records for the machine-readable formats. JSON field order and
//! CSV columns are part of the CLI contract and pinned by golden tests.

use std::collections::BTreeMap;

use serde::Serialize;

use secdom::verify::{SurveyRow, TheoremReport, Verdict};

/// One solved parameter for one instance.
#[derive(Serialize)]
pub struct ResultOut {
    pub parameter: String,
    pub value: usize,
    pub witness: Vec<usize>,
    pub exhausted_below: bool,
    /// Attacker -> defender assignment; absent for plain domination.
    pub defenders: Option<BTreeMap<String, usize>>,
    pub cached: bool,
    pub wall_ms: u64,
}

#[derive(Serialize)]
pub struct ComputeOut {
    pub instance: String,
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub results: Vec<ResultOut>,
}

#[derive(Serialize)]
pub struct ConstructOut {
    pub kind: String,
    pub parameters: BTreeMap<String, usize>,
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub expected_gamma_s: usize,
    pub expected_gamma_s_mu: usize,
}

#[derive(Serialize)]
pub struct ReportOut {
    pub theorem: String,
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub verdict: String,
    pub counterexample: Option<String>,
}

impl From<&TheoremReport> for ReportOut {
    fn from(r: &TheoremReport) -> Self {
        ReportOut {
            theorem: r.theorem.to_string(),
            instance: r.instance.clone(),
            expected: r.expected.clone(),
            computed: r.computed.clone(),
            verdict: r.verdict.to_string(),
            counterexample: r.counterexample.clone(),
        }
    }
}

/// One survey instance, either evaluated or skipped with a reason.
#[derive(Serialize)]
pub struct SurveyOut {
    pub instance: String,
    pub order: Option<usize>,
    pub max_degree: Option<usize>,
    pub gamma: Option<usize>,
    pub gamma_s: Option<usize>,
    pub gamma_s_mu: Option<usize>,
    pub fw1: String,
    pub fw2: String,
    pub fw3: String,
    pub fw4: String,
    pub verdict: String,
}

impl SurveyOut {
    pub fn evaluated(row: &SurveyRow) -> Self {
        let fw1 = if !row.fw1_applicable() {
            "not-applicable"
        } else if row.fw1_consistent() {
            "consistent"
        } else {
            "counterexample"
        };
        let fw2 = if row.fw2_consistent() {
            "consistent"
        } else {
            "counterexample"
        };
        let fail = !row.fw1_consistent() || !row.fw2_consistent();
        SurveyOut {
            instance: row.graph6.clone(),
            order: Some(row.order),
            max_degree: Some(row.max_degree),
            gamma: Some(row.gamma),
            gamma_s: Some(row.gamma_s),
            gamma_s_mu: Some(row.gamma_s_mu),
            fw1: fw1.into(),
            fw2: fw2.into(),
            fw3: row.fw3_witness().unwrap_or("none").into(),
            fw4: if row.fw4_member() {
                "member".into()
            } else {
                "non-member".into()
            },
            verdict: if fail { "fail".into() } else { "pass".into() },
        }
    }

    pub fn skipped(instance: String, reason: &str) -> Self {
        SurveyOut {
            instance,
            order: None,
            max_degree: None,
            gamma: None,
            gamma_s: None,
            gamma_s_mu: None,
            fw1: String::new(),
            fw2: String::new(),
            fw3: String::new(),
            fw4: String::new(),
            verdict: Verdict::Skipped {
                reason: reason.into(),
            }
            .to_string(),
        }
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == "fail"
    }
}

fn blank(field: &Option<usize>) -> String {
    field.map(|v| v.to_string()).unwrap_or_default()
}

/// CSV rows for `verify`: instance, expected, computed, verdict.
pub fn verify_csv(reports: &[TheoremReport]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["instance", "expected", "computed", "verdict"])
        .unwrap();
    for r in reports {
        writer
            .write_record([
                r.instance.as_str(),
                r.expected.as_str(),
                r.computed.as_str(),
                &r.verdict.to_string(),
            ])
            .unwrap();
    }
    String::from_utf8(writer.into_inner().unwrap()).unwrap()
}

/// CSV rows for `survey`, one per instance.
pub fn survey_csv(rows: &[SurveyOut]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "instance",
            "order",
            "max_degree",
            "gamma",
            "gamma_s",
            "gamma_s_mu",
            "fw1",
            "fw2",
            "fw3",
            "fw4",
            "verdict",
        ])
        .unwrap();
    for r in rows {
        writer
            .write_record([
                r.instance.as_str(),
                &blank(&r.order),
                &blank(&r.max_degree),
                &blank(&r.gamma),
                &blank(&r.gamma_s),
                &blank(&r.gamma_s_mu),
                r.fw1.as_str(),
                r.fw2.as_str(),
                r.fw3.as_str(),
                r.fw4.as_str(),
                r.verdict.as_str(),
            ])
            .unwrap();
    }
    String::from_utf8(writer.into_inner().unwrap()).unwrap()
}
