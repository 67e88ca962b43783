use serde_json::{json, Map, Value};

use circuitwalk::{Error, Point, Polyhedron, Scalar, Walk};

/// Failure of a command: usage problems exit with 2, domain errors with 1.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(Error),
    /// The command ran but at least one check failed.
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) | Failure::Checks => 1,
        }
    }

    fn code(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "UsageError",
            Failure::Domain(e) => e.code(),
            Failure::Checks => "CheckFailed",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Domain(e) => e.to_string(),
            Failure::Checks => "one or more checks failed".into(),
        }
    }
}

/// What a command produced: a JSON payload plus its human rendering.
pub struct Outcome {
    pub instance: Option<(usize, usize)>,
    pub result: Value,
    pub text: String,
    /// Set by commands whose result is a list of checks, when one failed.
    pub checks_failed: bool,
}

pub fn rational<T: Scalar>(x: &T) -> Value {
    Value::String(x.canonical_string())
}

pub fn point<T: Scalar>(p: &Point<T>) -> Value {
    Value::Array(p.coords().iter().map(rational).collect())
}

pub fn walk_json<T: Scalar>(walk: &Walk<T>) -> Value {
    let steps: Vec<Value> = walk
        .steps
        .iter()
        .map(|s| {
            json!({
                "members": s.circuit.members(),
                "sign": s.sign.symbol().to_string(),
                "epsilon": rational(&s.epsilon),
                "entering": s.entering.indices(),
            })
        })
        .collect();
    json!({
        "mode": walk.mode.to_string(),
        "length": walk.len(),
        "points": walk.points.iter().map(point).collect::<Vec<_>>(),
        "steps": steps,
    })
}

pub fn walk_text<T: Scalar>(walk: &Walk<T>) -> String {
    let mut out = format!("{} walk of length {}\n", walk.mode, walk.len());
    out.push_str(&format!("  {}\n", walk.points[0]));
    for (step, p) in walk.steps.iter().zip(&walk.points[1..]) {
        out.push_str(&format!("  {}{} by {} -> {}\n", step.circuit, step.sign, step.epsilon, p));
    }
    out
}

pub fn instance_of<T: Scalar>(poly: &Polyhedron<T>) -> Option<(usize, usize)> {
    Some((poly.node_count(), poly.edge_count()))
}

/// Renders the report for one command run.
pub fn render(command: &str, shown: Option<&Outcome>, failure: Option<&Failure>, as_json: bool) -> String {
    if as_json {
        let mut map = Map::new();
        map.insert("command".into(), Value::String(command.into()));
        map.insert(
            "instance".into(),
            match shown.and_then(|o| o.instance) {
                Some((n, m)) => json!({ "nodes": n, "edges": m }),
                None => Value::Null,
            },
        );
        map.insert("result".into(), shown.map(|o| o.result.clone()).unwrap_or(Value::Null));
        match failure {
            None => {
                map.insert("status".into(), Value::String("ok".into()));
            }
            Some(f) => {
                map.insert("status".into(), Value::String("error".into()));
                map.insert("error".into(), json!({ "code": f.code(), "message": f.message() }));
            }
        }
        let mut text = serde_json::to_string_pretty(&Value::Object(map)).expect("JSON values serialize");
        text.push('\n');
        text
    } else {
        let mut text = shown.map(|o| o.text.clone()).unwrap_or_default();
        if let Some(f) = failure {
            text.push_str(&format!("error [{}]: {}\n", f.code(), f.message()));
        }
        text
    }
}
