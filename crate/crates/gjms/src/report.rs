//! Verdict records for identity checks and their machine-readable form.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

/// Wall-clock timer for a single check.
#[derive(Clone, Copy, Debug)]
pub struct Timer(Instant);

impl Timer {
    pub fn start() -> Self {
        Timer(Instant::now())
    }

    pub fn elapsed_ms(self) -> u64 {
        self.0.elapsed().as_millis() as u64
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

/// Verdict for one identity check. `status` is `Pass` exactly when the two
/// renderings denote equal objects; renderings are canonical, so string
/// equality and object equality coincide. Failing polynomial checks carry
/// the exact difference in `note` so the failure is diagnosable.
#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: CheckStatus,
    pub lhs: String,
    pub rhs: String,
    pub note: Option<String>,
    pub elapsed_ms: u64,
}

impl CheckRecord {
    /// Compare two values exactly and record both sides.
    pub fn comparison<V: PartialEq + fmt::Display>(
        check: &str,
        params: Vec<(&str, String)>,
        lhs: &V,
        rhs: &V,
        timer: Timer,
    ) -> Self {
        let status = if lhs == rhs {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        CheckRecord {
            check: check.to_string(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            status,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            note: None,
            elapsed_ms: timer.elapsed_ms(),
        }
    }

    /// Attach a lazily rendered note (e.g. the exact difference) when the
    /// comparison failed.
    pub fn with_note_on_fail(mut self, note: impl FnOnce() -> String) -> Self {
        if self.is_fail() {
            self.note = Some(note());
        }
        self
    }

    /// A failure whose two sides are not comparable objects (e.g. one side
    /// errored); the renderings are taken as given.
    pub fn failure(
        check: &str,
        params: Vec<(&str, String)>,
        lhs: String,
        rhs: String,
        timer: Timer,
    ) -> Self {
        CheckRecord {
            check: check.to_string(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            status: CheckStatus::Fail,
            lhs,
            rhs,
            note: None,
            elapsed_ms: timer.elapsed_ms(),
        }
    }

    pub fn skipped(check: &str, params: Vec<(&str, String)>, reason: String, timer: Timer) -> Self {
        CheckRecord {
            check: check.to_string(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            status: CheckStatus::Skipped(reason),
            lhs: String::new(),
            rhs: String::new(),
            note: None,
            elapsed_ms: timer.elapsed_ms(),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == CheckStatus::Fail
    }

    pub fn status_string(&self) -> String {
        match &self.status {
            CheckStatus::Pass => "pass".to_string(),
            CheckStatus::Fail => "fail".to_string(),
            CheckStatus::Skipped(reason) => format!("skipped: {}", reason),
        }
    }

    /// One self-contained JSON object per record, exact values as strings.
    pub fn json_line(&self) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            check: &'a str,
            params: &'a BTreeMap<String, String>,
            status: String,
            lhs: &'a str,
            rhs: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            note: &'a Option<String>,
            elapsed_ms: u64,
        }
        serde_json::to_string(&Line {
            check: &self.check,
            params: &self.params,
            status: self.status_string(),
            lhs: &self.lhs,
            rhs: &self.rhs,
            note: &self.note,
            elapsed_ms: self.elapsed_ms,
        })
        .expect("record serializes")
    }

    /// `"k=v k=v"` with keys in map order.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{}={}", k, v))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Deterministic record order: check name, then parameters compared
/// numerically where both values parse as integers.
pub fn sort_records(records: &mut [CheckRecord]) {
    records.sort_by(|a, b| {
        a.check
            .cmp(&b.check)
            .then_with(|| cmp_params(&a.params, &b.params))
    });
}

fn cmp_params(a: &BTreeMap<String, String>, b: &BTreeMap<String, String>) -> std::cmp::Ordering {
    let mut ai = a.iter();
    let mut bi = b.iter();
    loop {
        match (ai.next(), bi.next()) {
            (None, None) => return std::cmp::Ordering::Equal,
            (None, Some(_)) => return std::cmp::Ordering::Less,
            (Some(_), None) => return std::cmp::Ordering::Greater,
            (Some((ka, va)), Some((kb, vb))) => {
                let ord = ka.cmp(kb).then_with(|| cmp_values(va, vb));
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
            }
        }
    }
}

// Total order: integer-valued strings first, numerically; everything else
// after, lexicographically.
fn cmp_values(a: &str, b: &str) -> std::cmp::Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        (Ok(_), Err(_)) => std::cmp::Ordering::Less,
        (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comparison_status() {
        let t = Timer::start();
        let rec = CheckRecord::comparison("demo", vec![("N", "3".into())], &1, &1, t);
        assert!(rec.is_pass());
        let rec = CheckRecord::comparison("demo", vec![("N", "3".into())], &1, &2, t);
        assert!(rec.is_fail());
        assert_eq!(rec.lhs, "1");
        assert_eq!(rec.rhs, "2");
    }

    #[test]
    fn note_only_attaches_to_failures() {
        let t = Timer::start();
        let ok = CheckRecord::comparison("demo", vec![], &1, &1, t)
            .with_note_on_fail(|| "difference: 0".into());
        assert!(ok.note.is_none());
        assert!(!ok.json_line().contains("note"));
        let bad = CheckRecord::comparison("demo", vec![], &1, &2, t)
            .with_note_on_fail(|| "difference: -1".into());
        assert_eq!(bad.note.as_deref(), Some("difference: -1"));
        let v: serde_json::Value = serde_json::from_str(&bad.json_line()).unwrap();
        assert_eq!(v["note"], "difference: -1");
    }

    #[test]
    fn json_shape() {
        let t = Timer::start();
        let mut rec = CheckRecord::comparison("demo", vec![("N", "3".into())], &1, &1, t);
        rec.elapsed_ms = 0;
        let line = rec.json_line();
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v["check"], "demo");
        assert_eq!(v["params"]["N"], "3");
        assert_eq!(v["status"], "pass");
        assert_eq!(v["elapsed_ms"], 0);
    }

    #[test]
    fn numeric_aware_ordering() {
        let t = Timer::start();
        let mk = |n: u32| CheckRecord::comparison("demo", vec![("N", n.to_string())], &1, &1, t);
        let mut recs = vec![mk(10), mk(2), mk(1)];
        sort_records(&mut recs);
        let order: Vec<_> = recs.iter().map(|r| r.params["N"].clone()).collect();
        assert_eq!(order, vec!["1", "2", "10"]);
    }
}
