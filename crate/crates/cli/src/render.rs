//! Arc diagrams as SVG or plain text.

use std::fmt::Write;

use cyclepat::perm::Permutation;

const STEP: usize = 40;
const MARGIN: usize = 30;

/// The length of the cycle holding each element, indexed from 1.
fn cycle_lengths(p: &Permutation) -> Vec<usize> {
    let mut len = vec![0; p.len() + 1];
    for cycle in p.decompose().cycles() {
        for &v in cycle {
            len[v] = cycle.len();
        }
    }
    len
}

fn colour(cycle_len: usize) -> &'static str {
    match cycle_len {
        2 => "#1f77b4",
        3 => "#d62728",
        _ => "#7f7f7f",
    }
}

/// Points on a line, one semicircle per arc. 2-cycles are blue, 3-cycles
/// red and dashed, longer cycles grey; fixed points are hollow.
pub fn svg(p: &Permutation) -> String {
    let n = p.len();
    let lengths = cycle_lengths(p);
    let arcs = p.arc_diagram();
    let widest = arcs.arcs().iter().map(|&(a, b)| b - a).max().unwrap_or(0);
    let baseline = MARGIN + widest * STEP / 2;
    let width = 2 * MARGIN + n.saturating_sub(1) * STEP;
    let height = baseline + MARGIN;
    let x = |i: usize| MARGIN + (i - 1) * STEP;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"  <title>{}</title>"#, p.to_cycle_string()).unwrap();
    if n > 1 {
        writeln!(
            out,
            r##"  <line x1="{}" y1="{baseline}" x2="{}" y2="{baseline}" stroke="#cccccc"/>"##,
            x(1),
            x(n)
        )
        .unwrap();
    }
    for &(a, b) in arcs.arcs() {
        let r = (b - a) * STEP / 2;
        let len = lengths[a];
        let dash = if len == 3 { r#" stroke-dasharray="6 3""# } else { "" };
        writeln!(
            out,
            r#"  <path class="arc cycle-{len}" d="M {} {baseline} A {r} {r} 0 0 1 {} {baseline}" fill="none" stroke="{}" stroke-width="2"{dash}/>"#,
            x(a),
            x(b),
            colour(len)
        )
        .unwrap();
    }
    for i in 1..=n {
        let fill = if lengths[i] == 1 { "white" } else { colour(lengths[i]) };
        writeln!(
            out,
            r##"  <circle class="point cycle-{}" cx="{}" cy="{baseline}" r="5" fill="{fill}" stroke="#000000"/>"##,
            lengths[i],
            x(i)
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="12" text-anchor="middle">{i}</text>"#,
            x(i),
            baseline + 20
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// One line per arc drawn as a bracket under the number line. Points are
/// `o` in a 2-cycle, `*` in a 3-cycle, `#` in a longer cycle and `.` when
/// fixed.
pub fn ascii(p: &Permutation) -> String {
    let n = p.len();
    let lengths = cycle_lengths(p);
    let col = |i: usize| (i - 1) * 4;
    let mut out = String::new();
    let labels: String = (1..=n).map(|i| format!("{i:<4}")).collect();
    out.push_str(labels.trim_end());
    out.push('\n');
    let marks: String = (1..=n)
        .map(|i| {
            let c = match lengths[i] {
                1 => '.',
                2 => 'o',
                3 => '*',
                _ => '#',
            };
            format!("{c:<4}")
        })
        .collect();
    out.push_str(marks.trim_end());
    out.push('\n');
    for &(a, b) in p.arc_diagram().arcs() {
        let mut line = " ".repeat(col(a));
        line.push('\\');
        line.push_str(&"_".repeat(col(b) - col(a) - 1));
        line.push('/');
        let _ = write!(line, "  ({a},{b}) {}-cycle", lengths[a]);
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svg_counts_points_and_arcs() {
        let p: Permutation = "(1,5)(2)(3,9,8)(4,6)(7)".parse().unwrap();
        let doc = svg(&p);
        assert_eq!(doc.matches("<circle").count(), 9);
        assert_eq!(doc.matches("<path").count(), 4);
        assert_eq!(doc.matches("class=\"arc cycle-3\"").count(), 2);
        assert_eq!(doc.matches("fill=\"white\"").count(), 2);
    }

    #[test]
    fn identity_has_no_arcs() {
        let doc = svg(&Permutation::identity(4));
        assert_eq!(doc.matches("<circle").count(), 4);
        assert_eq!(doc.matches("<path").count(), 0);
        assert_eq!(ascii(&Permutation::identity(3)).lines().count(), 2);
    }

    #[test]
    fn ascii_lists_arcs() {
        let text = ascii(&"7615423".parse().unwrap());
        for arc in ["(1,3) 3-cycle", "(3,7) 3-cycle", "(2,6) 2-cycle", "(4,5) 2-cycle"] {
            assert!(text.contains(arc), "{text}");
        }
        assert_eq!(text.lines().count(), 6);
    }
}
