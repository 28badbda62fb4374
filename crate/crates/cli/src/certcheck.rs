//! Independent certificate checker. It reads the JSON by hand and checks
//! each edge against the graph, without trusting the routing code.

use std::collections::HashSet;

use bicolor::{Color, ColoredBigraph};
use serde_json::Value;

/// A parsed vertex: `(is_x, index)`.
type V = (bool, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertSummary {
    pub n: usize,
    pub cycle_color: Color,
    pub cycle_len: usize,
    pub path_color: Color,
    pub path_order: usize,
}

fn color(v: &Value, field: &str) -> Result<Color, String> {
    match v.get(field).and_then(Value::as_str) {
        Some("red") | Some("Red") => Ok(Color::Red),
        Some("blue") | Some("Blue") => Ok(Color::Blue),
        Some(other) => Err(format!("unknown color `{other}` in `{field}`")),
        None => Err(format!("missing field `{field}`")),
    }
}

fn vertex(v: &Value, n: usize) -> Result<V, String> {
    let s = v
        .as_str()
        .ok_or_else(|| format!("vertex {v} is not a string"))?;
    let (is_x, rest) = match s.as_bytes().first() {
        Some(b'x') => (true, &s[1..]),
        Some(b'y') => (false, &s[1..]),
        _ => return Err(format!("unknown vertex `{s}`")),
    };
    let i: usize = rest.parse().map_err(|_| format!("unknown vertex `{s}`"))?;
    if i >= n {
        return Err(format!(
            "unknown vertex `{s}`: index out of range for n = {n}"
        ));
    }
    Ok((is_x, i))
}

fn name(v: V) -> String {
    format!("{}{}", if v.0 { 'x' } else { 'y' }, v.1)
}

fn vertices(cert: &Value, field: &str, n: usize) -> Result<Vec<V>, String> {
    let arr = cert
        .get(field)
        .and_then(Value::as_array)
        .ok_or_else(|| format!("missing array `{field}`"))?;
    let vs = arr
        .iter()
        .map(|v| vertex(v, n))
        .collect::<Result<Vec<_>, _>>()?;
    let mut seen = HashSet::new();
    if let Some(&dup) = vs.iter().find(|v| !seen.insert(**v)) {
        return Err(format!("{field}: vertex {} repeated", name(dup)));
    }
    Ok(vs)
}

fn check_edge(g: &ColoredBigraph, field: &str, a: V, b: V, c: Color) -> Result<(), String> {
    if a.0 == b.0 {
        return Err(format!(
            "{field}: {} and {} are on the same side",
            name(a),
            name(b)
        ));
    }
    let (x, y) = if a.0 { (a.1, b.1) } else { (b.1, a.1) };
    if !g.has_edge(x, y, c) {
        return Err(format!("{field}: edge {}{} not {c}", name(a), name(b)));
    }
    Ok(())
}

/// Checks a routing certificate against `g`: a `color` cycle on at least
/// `2⌊n/2⌋` vertices and a `path_color` path on at least `2⌈n/2⌉`.
pub fn check_certificate(g: &ColoredBigraph, cert: &Value) -> Result<CertSummary, String> {
    let n = cert
        .get("n")
        .and_then(Value::as_u64)
        .ok_or("missing integer field `n`")? as usize;
    if n != g.n() {
        return Err(format!(
            "certificate is for n = {n}, graph has n = {}",
            g.n()
        ));
    }
    let cycle_color = color(cert, "color")?;
    // older certificates carry one color for both
    let path_color = if cert.get("path_color").is_some() {
        color(cert, "path_color")?
    } else {
        cycle_color
    };
    let cycle = vertices(cert, "cycle", n)?;
    let path = vertices(cert, "path", n)?;

    let want_cycle = 2 * (n / 2);
    if cycle.len() < want_cycle.max(4) {
        return Err(format!(
            "cycle too short: {} < {}",
            cycle.len(),
            want_cycle.max(4)
        ));
    }
    for w in cycle.windows(2) {
        check_edge(g, "cycle", w[0], w[1], cycle_color)?;
    }
    let (last, first) = (cycle[cycle.len() - 1], cycle[0]);
    check_edge(g, "cycle", last, first, cycle_color)
        .map_err(|e| format!("{e} (closing edge missing)"))?;

    let want_path = 2 * n.div_ceil(2);
    if path.len() < want_path {
        return Err(format!("path too short: {} < {want_path}", path.len()));
    }
    for w in path.windows(2) {
        check_edge(g, "path", w[0], w[1], path_color)?;
    }
    Ok(CertSummary {
        n,
        cycle_color,
        cycle_len: cycle.len(),
        path_color,
        path_order: path.len(),
    })
}
