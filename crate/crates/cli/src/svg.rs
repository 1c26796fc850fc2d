//! Bare-bones SVG line chart for the maximum-entanglement series.

use std::fmt::Write;

use entmat_core::formulas::PlotSeries;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 48.0;
const COLORS: [&str; 3] = ["#1f77b4", "#d62728", "#2ca02c"];

pub(crate) fn line_chart(series: &PlotSeries) -> String {
    let families = series.families();
    let points = families.iter().flat_map(|(_, p)| p.iter());
    let (mut n_lo, mut n_hi, mut v_hi) = (usize::MAX, 0usize, 0u64);
    for &(n, v) in points {
        n_lo = n_lo.min(n);
        n_hi = n_hi.max(n);
        v_hi = v_hi.max(v);
    }
    if n_lo > n_hi {
        (n_lo, n_hi) = (0, 1);
    }
    let span = (n_hi - n_lo).max(1) as f64;
    let x = |n: usize| MARGIN + (n - n_lo) as f64 / span * (WIDTH - 2.0 * MARGIN);
    let y = |v: u64| HEIGHT - MARGIN - v as f64 / v_hi.max(1) as f64 * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<path d="M{m} {m} V{b} H{r}" fill="none" stroke="black"/>"#,
        m = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" font-size="12" text-anchor="middle">N = {n_lo}..{n_hi}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 16.0
    );
    let _ = writeln!(
        s,
        r#"<text x="8" y="{:.1}" font-size="12">{v_hi} ebits</text>"#,
        MARGIN - 8.0
    );
    for (k, (name, pts)) in families.iter().enumerate() {
        if !pts.is_empty() {
            let coords: Vec<String> = pts
                .iter()
                .map(|&(n, v)| format!("{:.2},{:.2}", x(n), y(v)))
                .collect();
            let _ = writeln!(
                s,
                r#"<polyline fill="none" stroke="{}" stroke-width="2" points="{}"/>"#,
                COLORS[k],
                coords.join(" ")
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" font-size="12" fill="{}">{name}</text>"#,
            MARGIN + 8.0,
            MARGIN + 16.0 * (k as f64 + 1.0),
            COLORS[k]
        );
    }
    s.push_str("</svg>\n");
    s
}
