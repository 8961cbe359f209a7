//! Structured verification reports: one record per claim, with a verdict,
//! a witness, and the JSON serialization used by the command-line runner.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "skipped",
        })
    }
}

/// One verified claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub paper_location: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub runtime_ms: u64,
}

/// A full report: schema `{version, claims}`, claims sorted by id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub claims: Vec<ClaimRecord>,
}

impl Report {
    /// Assembles a report; claims are sorted by id, ids must be unique,
    /// and failing claims must carry a witness.
    pub fn new(mut claims: Vec<ClaimRecord>) -> Report {
        claims.sort_by(|a, b| a.id.cmp(&b.id));
        for pair in claims.windows(2) {
            assert_ne!(pair[0].id, pair[1].id, "claim ids must be unique");
        }
        for c in &claims {
            if c.verdict == Verdict::Fail {
                assert!(c.witness.is_some(), "fail records must carry a witness");
            }
        }
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            claims,
        }
    }

    pub fn all_executed_pass(&self) -> bool {
        self.claims.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn find(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are serializable")
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Human-readable table, one line per claim.
    pub fn render_text(&self) -> String {
        let id_width = self
            .claims
            .iter()
            .map(|c| c.id.len())
            .max()
            .unwrap_or(0)
            .max(5);
        let loc_width = self
            .claims
            .iter()
            .map(|c| c.paper_location.len())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for c in &self.claims {
            out.push_str(&format!(
                "{:>7}  {:<id_width$}  {:<loc_width$}  {:>5} ms\n",
                c.verdict.to_string(),
                c.id,
                c.paper_location,
                c.runtime_ms,
            ));
            if let Some(witness) = &c.witness {
                for line in witness.lines() {
                    out.push_str("         ");
                    out.push_str(line);
                    out.push('\n');
                }
            }
        }
        let (pass, fail, skip) = self.tally();
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            pass, fail, skip
        ));
        out
    }

    pub fn tally(&self) -> (usize, usize, usize) {
        let mut t = (0, 0, 0);
        for c in &self.claims {
            match c.verdict {
                Verdict::Pass => t.0 += 1,
                Verdict::Fail => t.1 += 1,
                Verdict::Skipped => t.2 += 1,
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(id: &str, verdict: Verdict) -> ClaimRecord {
        ClaimRecord {
            id: id.to_string(),
            paper_location: "Somewhere".to_string(),
            verdict,
            witness: match verdict {
                Verdict::Fail => Some("difference: nonzero".to_string()),
                _ => Some("ok".to_string()),
            },
            runtime_ms: 1,
        }
    }

    #[test]
    fn report_sorts_claims_by_id() {
        let r = Report::new(vec![
            record("table-1", Verdict::Pass),
            record("lemma-4.1", Verdict::Pass),
        ]);
        let ids: Vec<&str> = r.claims.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, vec!["lemma-4.1", "table-1"]);
    }

    #[test]
    fn json_round_trip() {
        let r = Report::new(vec![
            record("a", Verdict::Pass),
            record("b", Verdict::Fail),
            record("c", Verdict::Skipped),
        ]);
        let parsed = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(parsed, r);
    }

    #[test]
    fn verdict_serialization_is_lowercase() {
        assert_eq!(serde_json::to_string(&Verdict::Pass).unwrap(), "\"pass\"");
        assert_eq!(serde_json::to_string(&Verdict::Fail).unwrap(), "\"fail\"");
        assert_eq!(
            serde_json::to_string(&Verdict::Skipped).unwrap(),
            "\"skipped\""
        );
    }

    #[test]
    fn pass_and_skip_do_not_fail_a_report() {
        let r = Report::new(vec![record("a", Verdict::Pass), record("b", Verdict::Skipped)]);
        assert!(r.all_executed_pass());
        let r = Report::new(vec![record("a", Verdict::Fail)]);
        assert!(!r.all_executed_pass());
    }

    #[test]
    #[should_panic(expected = "unique")]
    fn duplicate_ids_are_rejected() {
        Report::new(vec![record("a", Verdict::Pass), record("a", Verdict::Pass)]);
    }

    #[test]
    fn text_rendering_tallies() {
        let r = Report::new(vec![record("a", Verdict::Pass), record("b", Verdict::Skipped)]);
        let text = r.render_text();
        assert!(text.contains("1 passed, 0 failed, 1 skipped"));
        assert!(text.contains("pass"));
    }
}
