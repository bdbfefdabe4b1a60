use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NamedVerdict {
    pub name: String,
    pub verdict: String,
}

/// Everything a command produced. All fields except `elapsed_ms` are a pure function of the
/// command line and the spec file.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub fingerprint: Option<String>,
    pub field: Option<String>,
    pub seeds: Vec<u64>,
    pub hilbert: Option<Vec<usize>>,
    pub verdicts: Vec<NamedVerdict>,
    pub passed: bool,
    pub details: Value,
    #[serde(skip)]
    pub lines: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            fingerprint: None,
            field: None,
            seeds: Vec::new(),
            hilbert: None,
            verdicts: Vec::new(),
            passed: true,
            details: Value::Object(Default::default()),
            lines: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn verdict(&mut self, name: impl Into<String>, verdict: impl Serialize) {
        let verdict = match serde_json::to_value(verdict).expect("serializable") {
            Value::String(s) => s,
            other => other.to_string(),
        };
        self.verdicts.push(NamedVerdict {
            name: name.into(),
            verdict,
        });
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("serializable");
        if let Value::Object(map) = &mut self.details {
            map.insert(key.to_string(), value);
        }
    }
}

pub fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "command: {}", report.command);
            if let Some(field) = &report.field {
                let _ = writeln!(out, "field: {field}");
            }
            if let Some(fp) = &report.fingerprint {
                let _ = writeln!(out, "fingerprint: {fp}");
            }
            if !report.seeds.is_empty() {
                let seeds: Vec<String> = report.seeds.iter().map(u64::to_string).collect();
                let _ = writeln!(out, "seeds: {}", seeds.join(" "));
            }
            for line in &report.lines {
                let _ = writeln!(out, "{line}");
            }
            for v in &report.verdicts {
                let _ = writeln!(out, "verdict {}: {}", v.name, v.verdict);
            }
            let _ = writeln!(out, "result: {}", if report.passed { "pass" } else { "fail" });
            if let Some(ms) = report.elapsed_ms {
                let _ = writeln!(out, "elapsed: {ms} ms");
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("hilbert x.spec");
        r.field = Some("QQ".into());
        r.hilbert = Some(vec![1, 2, 1]);
        r.verdict("strong", lefschetz_core::Verdict::CertifiedSuccess);
        r.detail("zeta", 1);
        r.detail("alpha", vec![1, 2]);
        r.line("Hilbert function: 1 2 1");
        r
    }

    #[test]
    fn json_is_stable_and_lowercase() {
        let r = sample();
        let a = emit_report(&r, Format::Json);
        assert_eq!(a, emit_report(&r.clone(), Format::Json));
        assert!(a.contains("\"verdict\": \"certified_success\""));
        assert!(a.contains("\"hilbert\": [\n    1,\n    2,\n    1\n  ]"));
        assert!(a.find("\"alpha\"").unwrap() < a.find("\"zeta\"").unwrap());
        assert!(!a.contains("elapsed_ms"));
    }

    #[test]
    fn text_has_timing_last() {
        let mut r = sample();
        r.elapsed_ms = Some(3);
        let t = emit_report(&r, Format::Text);
        assert!(t.ends_with("result: pass\nelapsed: 3 ms\n"));
        assert!(t.contains("verdict strong: certified_success"));
    }
}
