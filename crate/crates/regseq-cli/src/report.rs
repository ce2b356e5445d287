//! The single report every run emits, in human or JSON form.

use regseq::perturb::DistanceCertificate;
use regseq::powersum::RootOfUnityWitness;
use serde_json::{json, Map, Value};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Ok,
    Error,
    Inconclusive,
    SizeCap,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Error => "error",
            Status::Inconclusive => "inconclusive",
            Status::SizeCap => "error",
        }
    }
}

pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub verdict: String,
    pub method: String,
    pub evidence: Map<String, Value>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            verdict: String::new(),
            method: String::new(),
            evidence: Map::new(),
            status: Status::Ok,
        }
    }

    pub fn error(&mut self, message: &str) {
        if self.status == Status::Ok {
            self.status = Status::Error;
        }
        self.evidence
            .insert("error".to_string(), Value::String(message.to_string()));
    }

    pub fn evidence_num(&mut self, key: &str, value: u64) {
        self.evidence.insert(key.to_string(), json!(value));
    }

    pub fn evidence_str(&mut self, key: &str, value: &str) {
        self.evidence
            .insert(key.to_string(), Value::String(value.to_string()));
    }

    pub fn distances(&mut self, cert: &DistanceCertificate) {
        let list: Vec<Value> = cert
            .per_poly
            .iter()
            .map(|pd| {
                json!({
                    "index": pd.index,
                    "lower": pd.distance.lower().to_string(),
                    "upper": pd.distance.upper().to_string(),
                    "exact": pd.distance.is_exact(),
                    "strict_below_one": pd.strict_below_one,
                })
            })
            .collect();
        self.evidence.insert("distances".to_string(), Value::Array(list));
        self.evidence
            .insert("certified".to_string(), json!(cert.certified));
    }

    pub fn witness(&mut self, w: &RootOfUnityWitness) {
        self.evidence.insert(
            "witness".to_string(),
            json!({
                "order": w.order(),
                "exponents": w.exponents(),
            }),
        );
    }

    pub fn finish(&mut self, start: Instant) {
        let ms = start.elapsed().as_millis() as u64;
        let timings = self
            .evidence
            .entry("timings_ms".to_string())
            .or_insert_with(|| json!({}));
        timings
            .as_object_mut()
            .expect("timings is an object")
            .insert("total".to_string(), json!(ms));
    }

    pub fn exit_code(&self) -> ExitCode {
        match self.status {
            Status::Ok => ExitCode::SUCCESS,
            Status::Error => ExitCode::from(2),
            Status::Inconclusive => ExitCode::from(3),
            Status::SizeCap => ExitCode::from(4),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "method": self.method,
            "evidence": self.evidence,
            "status": self.status.as_str(),
        })
    }

    pub fn emit(&self, json_mode: bool) {
        if json_mode {
            println!("{}", serde_json::to_string_pretty(&self.to_json()).expect("report serializes"));
            return;
        }
        println!("command: {}", self.command);
        for (i, input) in self.inputs.iter().enumerate() {
            println!("input[{i}]: {input}");
        }
        if !self.verdict.is_empty() {
            println!("verdict: {}", self.verdict);
        }
        if !self.method.is_empty() {
            println!("method: {}", self.method);
        }
        for (key, value) in &self.evidence {
            match value {
                Value::String(s) => println!("{key}: {s}"),
                other => println!("{key}: {other}"),
            }
        }
        println!("status: {}", self.status.as_str());
    }
}
