//! Plain-text rendering of a report for `--pretty`.

use std::fmt::Write;

use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_)) || v.as_array().is_some_and(|a| a.iter().all(is_scalar))
}

/// Rows of objects become an aligned table of their scalar columns; other
/// values are listed as `key: value`.
fn rows(out: &mut String, title: &str, items: &[Value]) {
    let Some(Value::Object(first)) = items.first() else {
        let _ = writeln!(out, "{title}: {}", scalar(&Value::Array(items.to_vec())));
        return;
    };
    let columns: Vec<&String> = first.keys().filter(|k| is_scalar(&first[*k])).collect();
    let cells: Vec<Vec<String>> = items
        .iter()
        .map(|item| columns.iter().map(|c| item.get(c.as_str()).map_or_else(String::new, scalar)).collect())
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(j, c)| cells.iter().map(|r| r[j].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
        .collect();
    let _ = writeln!(out, "{title}:");
    let line = |vals: Vec<String>| {
        vals.iter().zip(&widths).map(|(v, w)| format!("{v:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
    };
    let _ = writeln!(out, "  {}", line(columns.iter().map(|c| c.to_string()).collect()));
    for r in cells {
        let _ = writeln!(out, "  {}", line(r));
    }
}

fn section(out: &mut String, prefix: &str, v: &Value) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                match val {
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => rows(out, &key, items),
                    Value::Object(_) => section(out, &key, val),
                    _ => {
                        let _ = writeln!(out, "{key}: {}", scalar(val));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{prefix}: {}", scalar(other));
        }
    }
}

pub fn table(report: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}  {}",
        scalar(&report["command"]),
        if report["passed"].as_bool() == Some(true) { "PASS" } else { "FAIL" }
    );
    if !report["inputs"].is_null() {
        section(&mut out, "inputs", &report["inputs"]);
    }
    section(&mut out, "", &report["results"]);
    out
}
