#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use bicolor::families::large_deg_parts;
use serde_json::{json, Value};

pub fn bicolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// The block witness of `gen_large_deg(n)`: `X' = X1`, `Y1`, `Y2`.
pub fn canonical_witness_json(n: usize) -> Value {
    let ([x1, _], [y1, y2]) = large_deg_parts(n);
    json!({"orientation": "x", "xprime": x1, "y1": y1, "y2": y2, "eta": "0"})
}

pub fn write_json(path: &Path, v: &Value) {
    std::fs::write(path, serde_json::to_string_pretty(v).unwrap()).unwrap();
}

fn flip(c: &Value) -> Value {
    if c == "red" {
        json!("blue")
    } else {
        json!("red")
    }
}

/// Ten broken variants of a valid certificate, each with a label.
pub fn corruptions(cert: &Value) -> Vec<(&'static str, Value)> {
    let n = cert["n"].as_u64().unwrap() as usize;
    let cycle: Vec<Value> = cert["cycle"].as_array().unwrap().clone();
    let mut out = Vec::new();
    let mut push = |label, f: &dyn Fn(&mut Value)| {
        let mut c = cert.clone();
        f(&mut c);
        out.push((label, c));
    };
    push("cycle color flipped", &|c| c["color"] = flip(&c["color"]));
    push("path color flipped", &|c| {
        c["path_color"] = flip(&c["path_color"])
    });
    push("cycle truncated", &|c| {
        c["cycle"].as_array_mut().unwrap().truncate(cycle.len() - 2);
    });
    push("path truncated", &|c| {
        c["path"].as_array_mut().unwrap().pop();
    });
    push("repeated vertex", &|c| {
        c["cycle"][2] = c["cycle"][0].clone()
    });
    push("unknown vertex", &|c| c["path"][1] = json!("z1"));
    push("index out of range", &|c| {
        c["cycle"][1] = json!(format!("y{n}"))
    });
    push("same-side neighbours", &|c| {
        c["cycle"].as_array_mut().unwrap().swap(0, 1);
    });
    push("wrong n", &|c| c["n"] = json!(n + 1));
    push("vertex from another block", &|c| {
        let used: Vec<&str> = cycle.iter().map(|v| v.as_str().unwrap()).collect();
        let first = cycle[0].as_str().unwrap();
        let other_side = if first.starts_with('x') { 'y' } else { 'x' };
        let fresh = (0..n)
            .map(|i| format!("{other_side}{i}"))
            .find(|v| !used.contains(&v.as_str()))
            .expect("cycle is not spanning");
        c["cycle"][1] = json!(fresh);
    });
    out
}
