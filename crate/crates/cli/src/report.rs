//! Command reports: one record, rendered either as text or as JSON.

use std::fmt::Write as _;

use serde::Serialize;

/// One verdict with its supporting evidence.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    /// What was checked.
    pub name: String,
    /// The claim this check reproduces, when it stems from the classification.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anchor: Option<String>,
    /// Verdict.
    pub passed: bool,
    /// Evidence lines (failures, witnesses, values).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub evidence: Vec<String>,
}

impl Check {
    /// A check without anchor or evidence.
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), anchor: None, passed, evidence: Vec::new() }
    }

    /// Attach a claim anchor.
    pub fn anchor(mut self, anchor: impl Into<String>) -> Self {
        self.anchor = Some(anchor.into());
        self
    }

    /// Append an evidence line.
    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.evidence.push(line.into());
        self
    }

    /// Append several evidence lines.
    pub fn notes<I: IntoIterator<Item = String>>(mut self, lines: I) -> Self {
        self.evidence.extend(lines);
        self
    }
}

/// Everything a command produced.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    /// The command line, for the record.
    pub command: String,
    /// Informational output (series, bases, listings).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub info: Vec<String>,
    /// Verdicts.
    pub checks: Vec<Check>,
    /// Wall-clock time of the command.
    pub elapsed_ms: u128,
}

impl Report {
    /// Empty report for `command`.
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), info: Vec::new(), checks: Vec::new(), elapsed_ms: 0 }
    }

    /// Add an info line.
    pub fn info(&mut self, line: impl Into<String>) {
        self.info.push(line.into());
    }

    /// Add a check.
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// Number of failed checks.
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    /// 0 if every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failures() > 0)
    }

    /// Human-readable rendering.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for line in &self.info {
            let _ = writeln!(s, "{line}");
        }
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(s, "{tag}  {}", c.name);
            if let Some(a) = &c.anchor {
                let _ = write!(s, "  [{a}]");
            }
            s.push('\n');
            for e in &c.evidence {
                let _ = writeln!(s, "      {e}");
            }
        }
        if !self.checks.is_empty() {
            let _ = writeln!(
                s,
                "{} checks, {} failed ({} ms)",
                self.checks.len(),
                self.failures(),
                self.elapsed_ms
            );
        }
        s
    }

    /// JSON rendering; carries the same verdicts as the text form plus the
    /// exit code.
    pub fn render_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            report: &'a Report,
            failed: usize,
            exit_code: i32,
        }
        let out = Out { report: self, failed: self.failures(), exit_code: self.exit_code() };
        let mut s = serde_json::to_string_pretty(&out).expect("report serialises");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renderings_agree() {
        let mut r = Report::new("leibniz check x.json both");
        r.info("DS=[4,2,0]");
        r.push(Check::new("right Leibniz identity", true));
        r.push(Check::new("left Leibniz identity", false).note("(1,1,1): -e1").anchor("claim"));
        let text = r.render_text();
        assert!(text.contains("PASS  right Leibniz identity"));
        assert!(text.contains("FAIL  left Leibniz identity  [claim]"));
        let json: serde_json::Value = serde_json::from_str(&r.render_json()).unwrap();
        assert_eq!(json["checks"][0]["passed"], true);
        assert_eq!(json["checks"][1]["passed"], false);
        assert_eq!(json["exit_code"], 1);
        assert_eq!(r.exit_code(), 1);
    }
}
