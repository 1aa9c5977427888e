use std::fmt::Write;

use syzlift::report::{AnalysisReport, FormJson, LineJson};

fn form(f: &FormJson) -> String {
    format!("[{}]", f.join(","))
}

fn line(l: &LineJson) -> String {
    format!("({}, {}, {})", form(&l[0]), form(&l[1]), form(&l[2]))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "input: {} {} {}", form(&r.input[0]), form(&r.input[1]), form(&r.input[2]));
    let _ = writeln!(w, "degree: {}", r.degree);
    let _ = writeln!(w, "splitting type: ({},{})  balanced: {}", r.splitting.0, r.splitting.1, yes_no(r.balanced));
    let _ = writeln!(w, "p: {}", line(&r.p));
    let _ = writeln!(w, "q: {}", line(&r.q));
    let _ = writeln!(w, "hilbert-burch lambda: {}", r.hilbert_burch_lambda);
    let _ = writeln!(w, "map degree: {}", r.map_degree);
    let s = &r.second_level;
    let _ = writeln!(
        w,
        "second level: h={} e={} ascenzi={} alpha dependent={}",
        s.h,
        s.e,
        yes_no(s.ascenzi),
        yes_no(s.alpha_dependent)
    );
    let _ = writeln!(w, "gamma: {}", line(&s.gamma));
    let _ = writeln!(w, "delta: {}", line(&s.delta));
    if let Some(imp) = &r.implicit {
        let _ = writeln!(w, "F: {}", imp.equation);
        let _ = writeln!(w, "r: {}", imp.r);
    }
    if let Some(l) = &r.lift {
        let _ = writeln!(w, "lift: k={} in P^{}, chart {}, removed gcd {}", l.k, l.k + 1, l.chart, form(&l.removed_gcd));
        for (i, c) in l.coords.iter().enumerate() {
            let _ = writeln!(w, "  x{i} = {}", form(c));
        }
        let d = &l.diagnostics;
        let _ = writeln!(w, "diagnostics: immersion gcd degree {}, map degree {}", d.immersion_gcd_degree, d.map_degree);
        if let Some(v) = &d.vertex {
            let _ = writeln!(
                w,
                "  cone vertex ({}) with preimage degree {} (expected {})",
                v.join(":"),
                d.vertex_preimage_degree.unwrap_or(0),
                d.expected_vertex_multiplicity
            );
        }
        let _ = writeln!(w, "  passed: {}", yes_no(d.passed));
    }
    for note in &r.diagnostics {
        let _ = writeln!(w, "note: {note}");
    }
    out
}
