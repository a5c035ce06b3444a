use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use moykit::statesum::State;
use moykit::LaurentPoly;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// Everything a command produces; `pass = false` maps to exit code 2.
#[derive(Debug)]
pub struct Report {
    pub n: u32,
    pub input: Option<String>,
    pub poly: Option<LaurentPoly>,
    pub tau_odd: Option<LaurentPoly>,
    pub report: Option<Value>,
    pub states: Option<Vec<State>>,
    pub pass: bool,
}

impl Report {
    pub fn empty(n: u32, input: Option<&Path>) -> Self {
        Self {
            n,
            input: input.map(|p| p.display().to_string()),
            poly: None,
            tau_odd: None,
            report: None,
            states: None,
            pass: true,
        }
    }

    pub fn poly(n: u32, input: &Path, p: LaurentPoly) -> Self {
        Self { poly: Some(p), ..Self::empty(n, Some(input)) }
    }

    pub fn render(&self, fmt: Format) -> String {
        match fmt {
            Format::Json => format!("{}\n", self.to_json()),
            Format::Csv => self.to_csv(),
            Format::Pretty => self.to_pretty(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("n".into(), json!(self.n));
        m.insert("input".into(), json!(self.input));
        if let Some(p) = &self.poly {
            m.insert("poly".into(), json!(p));
        }
        if let Some(p) = &self.tau_odd {
            m.insert("tau_odd".into(), json!(p));
        }
        if let Some(r) = &self.report {
            m.insert("report".into(), r.clone());
        }
        if let Some(s) = &self.states {
            m.insert("states".into(), json!(s));
        }
        Value::Object(m)
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        if let Some(states) = &self.states {
            out.push_str("state,edge,label,weight\n");
            for (i, s) in states.iter().enumerate() {
                for (e, l) in s.labels.iter().enumerate() {
                    let elems: Vec<String> = l.elements().iter().map(|x| x.to_string()).collect();
                    let _ = writeln!(out, "{i},{e},{},{}", elems.join(" "), s.weight);
                }
            }
            return out;
        }
        if self.poly.is_some() {
            out.push_str("part,exp_num,exp_den,coeff\n");
            for (part, p) in [("poly", &self.poly), ("tau_odd", &self.tau_odd)] {
                for (num, den, c) in p.iter().flat_map(|p| p.to_triples()) {
                    let _ = writeln!(out, "{part},{num},{den},{c}");
                }
            }
        }
        if let Some(Value::Object(r)) = &self.report {
            out.push_str("key,value\n");
            for (k, v) in r {
                let v = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                let _ = writeln!(out, "{k},\"{}\"", v.replace('"', "\"\""));
            }
        }
        out
    }

    fn to_pretty(&self) -> String {
        let mut out = format!("N = {}\n", self.n);
        if let Some(i) = &self.input {
            let _ = writeln!(out, "input: {i}");
        }
        if let Some(p) = &self.poly {
            let label = if self.tau_odd.is_some() { "even" } else { "poly" };
            let _ = writeln!(out, "{label}: {p}");
        }
        if let Some(p) = &self.tau_odd {
            let _ = writeln!(out, "odd: {p}");
        }
        if let Some(states) = &self.states {
            for s in states {
                let labels: Vec<String> = s
                    .labels
                    .iter()
                    .map(|l| format!("{:?}", l.elements()))
                    .collect();
                let _ = writeln!(out, "{}  {}", labels.join(" "), s.weight);
            }
            let _ = writeln!(out, "{} states", states.len());
        }
        if let Some(Value::Object(r)) = &self.report {
            for (k, v) in r {
                let _ = writeln!(out, "{k}: {v}");
            }
        }
        let _ = writeln!(out, "{}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}
