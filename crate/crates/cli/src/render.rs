use std::fmt::{Display, Write as _};

use cliquevec::{BettiTable, VerificationReport};

pub fn join<T: Display>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// Betti diagram: column `i`, row `j - i`, dots for zeros.
pub fn betti_diagram(table: &BettiTable) -> String {
    let pd = table.projective_dimension();
    let rows = table.entries().map(|((i, j), _)| j - i).max().unwrap_or(0);
    let cell = |i: usize, r: usize| match table.get(i, i + r) {
        0 => ".".to_string(),
        v => v.to_string(),
    };
    let totals: Vec<String> = (0..=pd)
        .map(|i| table.entries().filter(|((a, _), _)| *a == i).map(|(_, v)| v).sum::<u64>().to_string())
        .collect();
    let width = (0..=pd)
        .flat_map(|i| (0..=rows).map(move |r| (i, r)))
        .map(|(i, r)| cell(i, r).len())
        .chain(totals.iter().map(String::len))
        .chain(std::iter::once(pd.to_string().len()))
        .max()
        .unwrap_or(1);
    let label = rows.to_string().len().max("total".len()) + 1;

    let mut out = String::new();
    let line = |out: &mut String, head: String, cells: Vec<String>| {
        let _ = write!(out, "{head:>label$}");
        for c in cells {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
    };
    line(&mut out, String::new(), (0..=pd).map(|i| i.to_string()).collect());
    line(&mut out, "total:".into(), totals);
    for r in 0..=rows {
        line(&mut out, format!("{r}:"), (0..=pd).map(|i| cell(i, r)).collect());
    }
    let _ = write!(
        out,
        "projective dimension {pd}\ndepth {}\n2-linear resolution: {}",
        table.depth(),
        if table.has_two_linear_resolution() { "yes" } else { "no" }
    );
    out
}

pub fn report(r: &VerificationReport) -> String {
    let mut out = format!("{}: {}\n", r.theorem, r.statement);
    let _ = writeln!(out, "n = {}..={}, {} graphs scanned", r.n_min, r.n_max, r.graphs_scanned);
    for (name, count) in &r.checks {
        let _ = writeln!(out, "  {name}: {count}");
    }
    for note in &r.notes {
        let _ = writeln!(out, "note: {note}");
    }
    for c in r.counterexamples.iter().take(10) {
        match &c.graph6 {
            Some(g6) => {
                let _ = writeln!(out, "counterexample {g6}: {}", c.diagnostic);
            }
            None => {
                let _ = writeln!(out, "counterexample: {}", c.diagnostic);
            }
        }
    }
    if r.counterexamples.len() > 10 {
        let _ = writeln!(out, "... {} more", r.counterexamples.len() - 10);
    }
    let _ = write!(out, "{} in {} ms", if r.pass { "PASS" } else { "FAIL" }, r.elapsed_ms);
    out
}
