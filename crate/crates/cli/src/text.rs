//! Human-readable reports.

use std::fmt::Write;

use drg_spectral::excess::OracleOutcome;

use crate::report::{ReportDocument, SpectrumDocument, SpectrumInfo};

/// Six significant-ish digits, trailing zeros dropped.
pub fn num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let a = x.abs();
    if (1e-4..1e6).contains(&a) {
        let s = format!("{x:.6}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".into()
        } else {
            s.into()
        }
    } else {
        format!("{x:.6e}")
    }
}

fn list(xs: &[f64]) -> String {
    xs.iter().map(|&x| num(x)).collect::<Vec<_>>().join(", ")
}

/// `c_d x^d + … + c_0`, highest power first.
pub fn poly(coeffs: &[f64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0.0 && coeffs.len() > 1 {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c < 0.0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0.0 { " - " } else { " + " });
        }
        let power = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{k}"),
        };
        if k == 0 || mag != 1.0 {
            out.push_str(&num(mag));
            if k > 0 {
                out.push(' ');
            }
        }
        out.push_str(&power);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn spectrum_lines(out: &mut String, s: &SpectrumInfo) {
    let distinct: Vec<String> = s
        .thetas
        .iter()
        .zip(&s.multiplicities)
        .map(|(&t, m)| format!("{} (m={m})", num(t)))
        .collect();
    writeln!(out, "eigenvalues:  {}", list(&s.raw)).unwrap();
    writeln!(out, "distinct:     {}", distinct.join(", ")).unwrap();
    writeln!(out, "phi:          {}", list(&s.phis)).unwrap();
    let gap = s.min_gap.map_or("-".into(), num);
    writeln!(
        out,
        "min gap:      {gap}   max cluster width: {}",
        num(s.max_cluster_width)
    )
    .unwrap();
}

fn graph_line(out: &mut String, g: &crate::report::GraphInfo) {
    let regular = match g.degree {
        Some(k) => format!("{k}-regular"),
        None => "not regular".into(),
    };
    writeln!(
        out,
        "graph:        n = {}, |E| = {}, {regular}, mean degree {}, mean square degree {}",
        g.n,
        g.edges,
        num(g.degree_stats.mean_degree),
        num(g.degree_stats.mean_square_degree)
    )
    .unwrap();
}

pub fn spectrum(doc: &SpectrumDocument) -> String {
    let mut out = String::new();
    graph_line(&mut out, &doc.graph);
    spectrum_lines(&mut out, &doc.spectrum);
    out
}

/// Recurrence table with rows β, α, γ; blank cells where a coefficient does
/// not exist.
fn recurrence_table(out: &mut String, doc: &ReportDocument) {
    let p = &doc.predistance;
    let d = p.alpha.len() - 1;
    let cell = |v: Option<&f64>| v.map_or(String::new(), |&x| num(x));
    let rows: [(&str, Vec<String>); 4] = [
        ("i", (0..=d).map(|i| i.to_string()).collect()),
        ("beta", (0..=d).map(|i| cell(p.beta.get(i))).collect()),
        ("alpha", (0..=d).map(|i| cell(p.alpha.get(i))).collect()),
        (
            "gamma",
            (0..=d)
                .map(|i| {
                    if i == 0 {
                        String::new()
                    } else {
                        cell(p.gamma.get(i - 1))
                    }
                })
                .collect(),
        ),
    ];
    let width = rows
        .iter()
        .flat_map(|(_, cells)| cells.iter().map(String::len))
        .max()
        .unwrap_or(1);
    for (label, cells) in &rows {
        let mut line = format!("  {label:<6}");
        for c in cells {
            write!(line, " {c:>width$}").unwrap();
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
}

pub fn analysis(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let e = &doc.excess;
    graph_line(&mut out, &doc.graph);
    spectrum_lines(&mut out, &doc.spectrum);
    writeln!(out).unwrap();
    writeln!(
        out,
        "recurrence x r_i = beta_(i-1) r_(i-1) + alpha_i r_i + gamma_(i+1) r_(i+1):"
    )
    .unwrap();
    recurrence_table(&mut out, doc);
    writeln!(out).unwrap();
    writeln!(out, "predistance polynomials:").unwrap();
    for (i, c) in doc.predistance.coefficients.iter().enumerate() {
        writeln!(out, "  r_{i} = {}", poly(c)).unwrap();
    }
    writeln!(out, "  H   = {}", poly(&doc.hoffman.coefficients)).unwrap();
    writeln!(out, "max |H(L) - J| = {}", num(doc.hoffman.residual)).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "d = {}, diameter D = {}", e.d, e.diameter).unwrap();
    writeln!(out, "average excess k_d        = {}", num(e.average_excess)).unwrap();
    writeln!(
        out,
        "spectral excess r_d(0)    = {}",
        num(e.spectral_excess)
    )
    .unwrap();
    writeln!(
        out,
        "  from the phi products   = {}",
        num(e.spectral_excess_closed_form)
    )
    .unwrap();
    writeln!(
        out,
        "gap r_d(0) - k_d          = {} (relative {})",
        num(e.equality_gap),
        num(e.relative_gap)
    )
    .unwrap();
    writeln!(
        out,
        "max |r_i(L) - A_i|        = {}",
        list(&e.identity_residuals)
    )
    .unwrap();
    let oracle = match &e.oracle {
        None => "not run".into(),
        Some(OracleOutcome::DistanceRegular { intersection_array }) => {
            format!("distance-regular, intersection array {intersection_array}")
        }
        Some(OracleOutcome::Refused { refusal }) => format!("not distance-regular: {refusal}"),
    };
    writeln!(out, "oracle: {oracle}").unwrap();
    writeln!(
        out,
        "tolerances: eig {}, eq {}",
        num(doc.tolerances.eig),
        num(doc.tolerances.eq)
    )
    .unwrap();
    writeln!(out, "verdict: {}", e.verdict).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers() {
        assert_eq!(num(1.5), "1.5");
        assert_eq!(num(0.0), "0");
        assert_eq!(num(-3.0), "-3");
        assert_eq!(num(-1e-20), "-1.000000e-20");
        assert_eq!(num(2.0 - 2f64.sqrt()), "0.585786");
    }

    #[test]
    fn polynomials() {
        assert_eq!(
            poly(&[0.8, -6.4, 5.2, -1.0]),
            "-x^3 + 5.2 x^2 - 6.4 x + 0.8"
        );
        assert_eq!(poly(&[1.0]), "1");
        assert_eq!(poly(&[]), "0");
        assert_eq!(poly(&[0.0, 1.0]), "x");
    }
}
