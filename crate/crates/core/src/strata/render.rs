//! Text, markdown and CSV renderings of verification results.

use std::fmt::Write as _;

use super::assembly::{VerificationReport, VerificationSuite};
use super::omega::ConsistencyReport;
use crate::ring::MotiveClass;

fn mark(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

/// Markdown table with columns `i` and `b_{2i}`.
pub fn betti_markdown(class: &MotiveClass) -> String {
    let mut out = String::from("| i | b_{2i} |\n|---:|---:|\n");
    for (i, c) in class.coeffs().iter().enumerate() {
        let _ = writeln!(out, "| {i} | {c} |");
    }
    out
}

/// CSV Betti table; a leading `target` column is added when `target` is given.
pub fn betti_csv(class: &MotiveClass, target: Option<&str>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: &[&str] = if target.is_some() {
        &["target", "i", "b_{2i}"]
    } else {
        &["i", "b_{2i}"]
    };
    w.write_record(header).expect("in-memory write");
    for (i, c) in class.coeffs().iter().enumerate() {
        let (i, c) = (i.to_string(), c.to_string());
        match target {
            Some(t) => w.write_record([t, &i, &c]),
            None => w.write_record([&i, &c]),
        }
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8")
}

fn report_markdown(r: &VerificationReport, out: &mut String) {
    let _ = writeln!(out, "## {} (`{}`)\n", r.title, r.target);
    out.push_str(&betti_markdown(&r.assembled));
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "- Euler number: {} (stated {})",
        r.euler_assembled, r.euler_expected
    );
    let f = &r.flags;
    let _ = writeln!(out, "- table match: {}", mark(f.table_match));
    let _ = writeln!(out, "- euler match: {}", mark(f.euler_match));
    let _ = writeln!(out, "- palindromic: {}", mark(f.palindrome));
    let _ = writeln!(
        out,
        "- degree {}: {}",
        r.dimension,
        mark(f.degree_is_dimension)
    );
    let _ = writeln!(out, "- non-negative: {}", mark(f.nonnegative));
    let _ = writeln!(out, "- constant term 1: {}", mark(f.constant_term_one));
    let _ = writeln!(out, "- stated strata reproduced: {}", mark(f.strata_match));
    let kind = if r.hard { "" } else { " (informational)" };
    let _ = writeln!(out, "- overall: {}{kind}\n", mark(r.pass));
}

fn consistency_markdown(c: &ConsistencyReport, out: &mut String) {
    out.push_str("## Omega_2^[6] sub-stratum assembly (informational)\n\n");
    out.push_str("| id | expr | class | euler |\n|---|---|---|---:|\n");
    for s in &c.sub_strata {
        let _ = writeln!(
            out,
            "| {} | `{}` | {} | {} |",
            s.id, s.expr, s.class, s.euler
        );
    }
    out.push_str("\n| n | R_n | euler(R_n) | division by P^n | S_n | euler(S_n) |\n");
    out.push_str("|---:|---|---:|---|---|---:|\n");
    for row in &c.by_n {
        let (outcome, quotient, euler) = match &row.division.quotient {
            Some(q) => (
                "exact".to_string(),
                q.to_string(),
                row.stratum_euler.clone().unwrap_or_default().to_string(),
            ),
            None => (
                format!("not exact: {}", row.division.error.as_deref().unwrap_or("")),
                "-".into(),
                "-".into(),
            ),
        };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {outcome} | {quotient} | {euler} |",
            row.n, row.total, row.total_euler
        );
    }
    let _ = writeln!(out);
    if !c.missing.is_empty() {
        let _ = writeln!(out, "- missing registry ids: {}", c.missing.join(", "));
    }
    let _ = writeln!(
        out,
        "- assembled: {} (euler {})",
        c.assembled, c.assembled_euler
    );
    let _ = writeln!(out, "- stated: {} (euler {})", c.stated, c.stated_euler);
    let _ = writeln!(
        out,
        "- difference: {} (euler {})",
        c.difference, c.difference_euler
    );
    let _ = writeln!(out, "- equal: {}\n", if c.matches { "yes" } else { "no" });
}

pub fn suite_markdown(suite: &VerificationSuite) -> String {
    let mut out = String::new();
    for r in &suite.reports {
        report_markdown(r, &mut out);
    }
    if let Some(c) = &suite.omega26 {
        consistency_markdown(c, &mut out);
    }
    out
}

pub fn suite_csv(suite: &VerificationSuite) -> String {
    let mut out = String::new();
    let single = suite.reports.len() == 1;
    for (k, r) in suite.reports.iter().enumerate() {
        let table = betti_csv(&r.assembled, (!single).then_some(r.target.id()));
        // one header for the whole file
        let body = if k == 0 {
            table.as_str()
        } else {
            table.split_once('\n').map_or("", |x| x.1)
        };
        out.push_str(body);
    }
    out
}

pub fn suite_text(suite: &VerificationSuite) -> String {
    let mut out = String::new();
    for r in &suite.reports {
        let _ = writeln!(
            out,
            "{:<8} {:<12} euler {:>5}  {}  {}",
            r.target.id(),
            r.title,
            r.euler_assembled,
            mark(r.pass),
            r.assembled
        );
    }
    if let Some(c) = &suite.omega26 {
        let _ = writeln!(
            out,
            "omega26  sub-stratum assembly euler {} vs stated {}: {} (informational)",
            c.assembled_euler,
            c.stated_euler,
            if c.matches { "equal" } else { "differs" }
        );
    }
    out
}
