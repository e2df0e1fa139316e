//! Plain-text Cayley tables.
//!
//! ```text
//! # label: Z3
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```

use std::io::{BufRead, Write};

use super::{Group, GroupError, Result, MAX_GROUP_ORDER};

/// Reads and validates a Cayley table, relabeling its identity to index 0.
pub fn load_cayley_table(source: impl BufRead) -> Result<Group> {
    let mut label = None;
    let mut order: Option<usize> = None;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (lineno, line) in source.lines().enumerate() {
        let line = line?;
        let lineno = lineno + 1;
        let trimmed = line.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(l) = comment.trim().strip_prefix("label:") {
                label = Some(l.trim().to_string());
            }
            continue;
        }
        if trimmed.is_empty() {
            continue;
        }
        let malformed = |reason: String| GroupError::MalformedRow {
            line: lineno,
            reason,
        };
        let Some(n) = order else {
            let n: usize = trimmed
                .parse()
                .map_err(|_| malformed(format!("expected the group order, found {trimmed:?}")))?;
            if n == 0 {
                return Err(malformed("group order must be positive".into()));
            }
            if n > MAX_GROUP_ORDER {
                return Err(GroupError::CapExceeded(n));
            }
            order = Some(n);
            continue;
        };
        if rows.len() == n {
            return Err(malformed(format!("more than {n} rows")));
        }
        let row = trimmed
            .split_whitespace()
            .map(|tok| match tok.parse::<u32>() {
                Ok(v) if (v as usize) < n => Ok(v),
                _ => Err(malformed(format!(
                    "entry {tok:?} is not an index below {n}"
                ))),
            })
            .collect::<Result<Vec<u32>>>()?;
        if row.len() != n {
            return Err(malformed(format!(
                "expected {n} entries, found {}",
                row.len()
            )));
        }
        rows.push(row);
    }
    let n = order.ok_or(GroupError::MalformedRow {
        line: 0,
        reason: "empty input".into(),
    })?;
    if rows.len() != n {
        return Err(GroupError::MalformedRow {
            line: 0,
            reason: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    let table: Vec<u32> = rows.into_iter().flatten().collect();
    check_latin(n, &table)?;

    let is_identity =
        |e: usize| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x);
    let e = (0..n)
        .find(|&e| is_identity(e))
        .ok_or(GroupError::MissingIdentity)?;

    // swap labels e <-> 0
    let relabel = |x: u32| -> u32 {
        if x as usize == e {
            0
        } else if x == 0 {
            e as u32
        } else {
            x
        }
    };
    let mut relabeled = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let v = table[a * n + b];
            relabeled[relabel(a as u32) as usize * n + relabel(b as u32) as usize] = relabel(v);
        }
    }
    let group = Group::from_table(label.unwrap_or_else(|| "table".to_string()), n, relabeled);
    check_associative_light(&group)?;
    Ok(group)
}

/// Writes a group in the format read by [`load_cayley_table`].
pub fn write_cayley_table(group: &Group, mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "# label: {}", group.label())?;
    writeln!(out, "{}", group.order())?;
    let mut line = String::new();
    for a in group.elements() {
        line.clear();
        for (i, v) in group.row(a).iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            line.push_str(&v.to_string());
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

pub(crate) fn check_latin(n: usize, table: &[u32]) -> Result<()> {
    let mut seen = vec![0usize; n];
    for r in 0..n {
        for c in 0..n {
            let v = table[r * n + c] as usize;
            if seen[v] == r + 1 {
                return Err(GroupError::NotLatinSquare(format!("row {r}")));
            }
            seen[v] = r + 1;
        }
    }
    seen.fill(0);
    for c in 0..n {
        for r in 0..n {
            let v = table[r * n + c] as usize;
            if seen[v] == c + 1 {
                return Err(GroupError::NotLatinSquare(format!("column {c}")));
            }
            seen[v] = c + 1;
        }
    }
    Ok(())
}

/// Light's associativity test: `(xa)y = x(ay)` for all `x, y` and every `a`
/// in a generating set. The set of such `a` is closed under products, so the
/// test is exact once the generators reach every element.
pub(crate) fn check_associative_light(g: &Group) -> Result<()> {
    let n = g.order();
    let mut generators: Vec<u32> = Vec::new();
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut closure = vec![0u32];
    for x in 0..n as u32 {
        if reached[x as usize] {
            continue;
        }
        generators.push(x);
        let mut head = 0;
        let mut queue = closure.clone();
        while head < queue.len() {
            let c = queue[head];
            head += 1;
            for &s in &generators {
                let v = g.mul(c, s);
                if !reached[v as usize] {
                    reached[v as usize] = true;
                    queue.push(v);
                }
            }
        }
        closure = queue;
    }
    for &a in &generators {
        for x in 0..n as u32 {
            let xa = g.mul(x, a);
            for y in 0..n as u32 {
                if g.mul(xa, y) != g.mul(x, g.mul(a, y)) {
                    return Err(GroupError::NotAssociative(x, a, y));
                }
            }
        }
    }
    Ok(())
}
