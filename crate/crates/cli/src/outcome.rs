use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// One command's result. The JSON form and the text form are both rendered
/// from this value.
#[derive(Debug, Serialize)]
pub struct CommandOutcome {
    pub command: &'static str,
    pub args: Value,
    pub status: Status,
    pub payload: Value,
    #[serde(skip)]
    pub human: String,
}

impl CommandOutcome {
    pub fn new(
        command: &'static str,
        args: impl Serialize,
        passed: bool,
        payload: impl Serialize,
        human: String,
    ) -> Self {
        Self {
            command,
            args: serde_json::to_value(args).expect("arguments serialize"),
            status: if passed { Status::Ok } else { Status::Error },
            payload: serde_json::to_value(payload).expect("payload serializes"),
            human,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Ok
    }
}

/// Integer when within `1e-6` of one, three decimals otherwise.
pub fn fmt_l1(x: f64) -> String {
    if (x - x.round()).abs() <= 1e-6 {
        format!("{}", x.round() as i64)
    } else {
        format!("{x:.3}")
    }
}

pub fn fmt_list(values: &[f64]) -> String {
    values.iter().map(|&v| fmt_l1(v)).collect::<Vec<_>>().join(", ")
}

pub fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// Structural equality with numeric leaves compared to within `tol`.
pub fn json_close(a: &Value, b: &Value, tol: f64) -> bool {
    match (a, b) {
        (Value::Number(x), Value::Number(y)) => match (x.as_f64(), y.as_f64()) {
            (Some(x), Some(y)) => (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs())),
            _ => x == y,
        },
        (Value::Array(x), Value::Array(y)) => x.len() == y.len() && x.iter().zip(y).all(|(p, q)| json_close(p, q, tol)),
        (Value::Object(x), Value::Object(y)) => {
            x.len() == y.len() && x.iter().all(|(k, v)| y.get(k).is_some_and(|w| json_close(v, w, tol)))
        }
        _ => a == b,
    }
}
