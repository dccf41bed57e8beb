use serde_json::Value;

use crate::args::Format;

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("values serialize"),
        Format::Table => table(v),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().enumerate().map(|(c, s)| format!("{s:<w$}", w = widths[c])).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Objects become key/value rows, arrays of objects become a header plus one
/// row per element; anything nested deeper is printed as compact JSON.
fn table(v: &Value) -> String {
    match v {
        Value::Object(m) => align(&m.iter().map(|(k, x)| vec![k.clone(), cell(x)]).collect::<Vec<_>>()),
        Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
            let mut keys: Vec<String> = Vec::new();
            for it in items {
                for k in it.as_object().expect("checked").keys() {
                    if !keys.contains(k) {
                        keys.push(k.clone());
                    }
                }
            }
            let mut rows = vec![keys.clone()];
            for it in items {
                rows.push(keys.iter().map(|k| it.get(k).map(cell).unwrap_or_default()).collect());
            }
            align(&rows)
        }
        Value::Array(items) => items.iter().map(|x| cell(x) + "\n").collect(),
        other => cell(other) + "\n",
    }
}
