//! Plain-text rendering of JSON reports.

use serde_json::Value;

pub fn render(value: &Value) -> String {
    let mut out = String::new();
    match value {
        Value::Object(_) => object(value, 0, &mut out),
        _ => {
            out += &inline(value);
            out.push('\n');
        }
    }
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(xs) => xs.iter().all(|x| !matches!(x, Value::Object(_)) && is_flat(x)),
        Value::String(s) => !s.contains('\n'),
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn object(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    let Value::Object(map) = v else { return };
    for (k, x) in map {
        match x {
            _ if is_flat(x) => *out += &format!("{pad}{k}: {}\n", inline(x)),
            Value::String(s) => {
                *out += &format!("{pad}{k}:\n");
                for line in s.lines() {
                    *out += &format!("{pad}  {line}\n");
                }
            }
            Value::Object(_) => {
                *out += &format!("{pad}{k}:\n");
                object(x, depth + 1, out);
            }
            Value::Array(xs) => {
                *out += &format!("{pad}{k}:\n");
                for (i, item) in xs.iter().enumerate() {
                    if is_flat(item) {
                        *out += &format!("{pad}  - {}\n", inline(item));
                    } else {
                        *out += &format!("{pad}  [{i}]\n");
                        object(item, depth + 2, out);
                    }
                }
            }
            _ => unreachable!("scalars are flat"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_rendering() {
        let v = json!({"a": 1, "b": [1, 2], "c": {"d": null}, "e": "x\ny", "f": [{"g": true}]});
        assert_eq!(render(&v), "a: 1\nb: [1, 2]\nc:\n  d: -\ne:\n  x\n  y\nf:\n  [0]\n    g: true\n");
    }
}
