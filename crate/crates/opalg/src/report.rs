//! Report envelope and deterministic JSON output.

use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use serde_json::{json, Map, Value};

/// One numeric claim and the tolerance it was tested against.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub value: Value,
    pub tol: Option<f64>,
    pub pass: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Checks(Vec<Check>);

impl Checks {
    /// `value ≤ tol`.
    pub fn below(&mut self, name: &str, value: f64, tol: f64) {
        self.0.push(Check { name: name.into(), value: json!(value), tol: Some(tol), pass: value <= tol });
    }

    /// A boolean claim with no tolerance.
    pub fn holds(&mut self, name: &str, pass: bool) {
        self.0.push(Check { name: name.into(), value: json!(pass), tol: None, pass });
    }

    pub fn pass(&self) -> bool {
        self.0.iter().all(|c| c.pass)
    }

    pub fn to_value(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|c| json!({ "name": c.name, "value": c.value, "tol": c.tol, "pass": c.pass }))
                .collect(),
        )
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Map<String, Value>,
    pub tolerances: Map<String, Value>,
    pub checks: Checks,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Self {
            command: command.into(),
            inputs,
            results: Map::new(),
            tolerances: Map::new(),
            checks: Checks::default(),
        }
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.results.insert(key.into(), serde_json::to_value(value).expect("serializable result"));
        self
    }

    pub fn tolerance(&mut self, key: &str, tol: f64) -> &mut Self {
        self.tolerances.insert(key.into(), json!(tol));
        self
    }

    pub fn pass(&self) -> bool {
        self.checks.pass()
    }

    pub fn to_value(&self) -> Value {
        let mut results = self.results.clone();
        results.insert("checks".into(), self.checks.to_value());
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": results,
            "tolerances": self.tolerances,
            "pass": self.pass(),
        })
    }

    pub fn render(&self) -> String {
        render(&self.to_value())
    }
}

/// Pretty printing with every float written as `{:.16e}`.
struct FixedFloats<'a>(PrettyFormatter<'a>);

impl Formatter for FixedFloats<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, f64::from(value))
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// Deterministic rendering of `v`, newline-terminated.
pub fn render(v: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloats(PrettyFormatter::with_indent(b"  ")));
    v.serialize(&mut ser).expect("writing to a Vec cannot fail");
    out.push(b'\n');
    String::from_utf8(out).expect("JSON is UTF-8")
}
