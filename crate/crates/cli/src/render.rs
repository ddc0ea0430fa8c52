//! Text rendering of a JSON report, so that `--format text` and
//! `--format json` carry the same information.

use serde_json::Value;

pub fn to_text(report: &Value) -> String {
    let mut out = String::new();
    match report {
        Value::Object(map) => {
            for (k, v) in map {
                field(&mut out, 0, k, v);
            }
        }
        other => {
            out.push_str(&scalar(other));
            out.push('\n');
        }
    }
    out
}

fn pad(n: usize) -> String {
    " ".repeat(n)
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn field(out: &mut String, indent: usize, key: &str, v: &Value) {
    match v {
        Value::String(s) if s.contains('\n') => {
            out.push_str(&format!("{}{key}: |\n", pad(indent)));
            for line in s.lines() {
                out.push_str(&format!("{}{line}\n", pad(indent + 2)));
            }
        }
        Value::Array(items) if items.iter().all(is_scalar) => {
            let cells: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{}{key}: [{}]\n", pad(indent), cells.join(", ")));
        }
        Value::Array(items) => {
            out.push_str(&format!("{}{key}:\n", pad(indent)));
            for item in items {
                entry(out, indent + 2, item);
            }
        }
        Value::Object(map) if map.is_empty() => out.push_str(&format!("{}{key}: {{}}\n", pad(indent))),
        Value::Object(map) => {
            out.push_str(&format!("{}{key}:\n", pad(indent)));
            for (k, v) in map {
                field(out, indent + 2, k, v);
            }
        }
        other => out.push_str(&format!("{}{key}: {}\n", pad(indent), scalar(other))),
    }
}

fn entry(out: &mut String, indent: usize, item: &Value) {
    match item {
        Value::Object(map) => {
            let mut first = true;
            for (k, v) in map {
                let mut line = String::new();
                field(&mut line, 0, k, v);
                let prefix = if first { format!("{}- ", pad(indent)) } else { pad(indent + 2) };
                first = false;
                for (i, l) in line.lines().enumerate() {
                    let lead = if i == 0 { prefix.clone() } else { pad(indent + 2) };
                    out.push_str(&format!("{lead}{l}\n"));
                }
            }
            if first {
                out.push_str(&format!("{}- {{}}\n", pad(indent)));
            }
        }
        Value::Array(items) => {
            let cells: Vec<String> = items.iter().map(|v| if is_scalar(v) { scalar(v) } else { v.to_string() }).collect();
            out.push_str(&format!("{}- [{}]\n", pad(indent), cells.join(", ")));
        }
        other => out.push_str(&format!("{}- {}\n", pad(indent), scalar(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_report() {
        let v = json!({
            "verdict": "NO",
            "reasons": [{"code": "P1_LOCAL_FAIL", "witness": ["e", "f", "g"]}],
            "sizes": {"objects": 2, "zero": null},
            "dot": "digraph g {\n}\n",
        });
        assert_eq!(
            to_text(&v),
            "verdict: NO\nreasons:\n  - code: P1_LOCAL_FAIL\n    witness: [e, f, g]\nsizes:\n  objects: 2\n  zero: none\ndot: |\n  digraph g {\n  }\n"
        );
    }
}
