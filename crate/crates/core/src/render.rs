use std::ops::RangeInclusive;

use crate::{CapDiagram, Error, Result, TallyProfile, WeightFunction};

/// Output flavor for diagram pictures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderStyle {
    Ascii,
    Svg,
}

/// Draws the number line of `f` with optional caps above it and an optional
/// tally polyline, over a window just wide enough for everything requested.
/// Output is byte-stable for identical inputs.
pub fn render(
    f: &WeightFunction,
    caps: Option<&CapDiagram>,
    tally: Option<&TallyProfile>,
    style: RenderStyle,
) -> Result<String> {
    let mut lo = f.min_entry().map(|a| a - 1).unwrap_or(-2);
    let mut hi = f.max_entry().map(|a| a + 1).unwrap_or(2);
    if let Some((span_lo, span_hi)) = caps.and_then(|c| c.span()) {
        lo = lo.min(span_lo);
        hi = hi.max(span_hi);
    }
    if let Some(t) = tally {
        lo = lo.min(*t.window().start());
        hi = hi.max(*t.window().end());
    }
    render_in_window(f, caps, tally, lo..=hi, style)
}

/// As [`render`], but over an explicit window. Errors if any requested
/// content (a cap endpoint, a mark of `f`, or a tally value) falls outside
/// the window.
pub fn render_in_window(
    f: &WeightFunction,
    caps: Option<&CapDiagram>,
    tally: Option<&TallyProfile>,
    window: RangeInclusive<i64>,
    style: RenderStyle,
) -> Result<String> {
    let (lo, hi) = (*window.start(), *window.end());
    let outside = |at: i64| Error::RenderOutsideWindow { lo, hi, at };
    for &a in f.entries() {
        if !window.contains(&a) {
            return Err(outside(a));
        }
    }
    if let Some((span_lo, span_hi)) = caps.and_then(|c| c.span()) {
        if span_lo < lo {
            return Err(outside(span_lo));
        }
        if span_hi > hi {
            return Err(outside(span_hi));
        }
    }
    if let Some(t) = tally {
        // Values must exist across the whole drawn window.
        if *t.window().start() > lo {
            return Err(outside(lo));
        }
        if *t.window().end() < hi {
            return Err(outside(hi));
        }
    }
    match style {
        RenderStyle::Ascii => Ok(render_ascii(f, caps, tally, lo, hi)),
        RenderStyle::Svg => Ok(render_svg(f, caps, tally, lo, hi)),
    }
}

struct Grid {
    rows: Vec<Vec<char>>,
    width: usize,
}

impl Grid {
    fn new(rows: usize, width: usize) -> Self {
        Self {
            rows: vec![vec![' '; width]; rows],
            width,
        }
    }

    fn put(&mut self, row: usize, col: usize, ch: char) {
        if col < self.width {
            self.rows[row][col] = ch;
        }
    }

    fn put_str(&mut self, row: usize, col: usize, s: &str) {
        for (k, ch) in s.chars().enumerate() {
            self.put(row, col + k, ch);
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: String = row.iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

fn render_ascii(
    f: &WeightFunction,
    caps: Option<&CapDiagram>,
    tally: Option<&TallyProfile>,
    lo: i64,
    hi: i64,
) -> String {
    let labels: Vec<String> = (lo..=hi).map(|z| z.to_string()).collect();
    let col_w = labels.iter().map(String::len).max().unwrap_or(1).max(1) + 1;

    let values: Vec<i64> = tally
        .map(|t| {
            (lo..=hi)
                .map(|z| t.value(z).expect("window checked"))
                .collect()
        })
        .unwrap_or_default();
    let (vmax, vmin) = (
        values.iter().max().copied().unwrap_or(0),
        values.iter().min().copied().unwrap_or(0),
    );
    let tally_rows = if tally.is_some() {
        (vmax - vmin + 1) as usize
    } else {
        0
    };
    let axis_w = if tally.is_some() {
        [vmax, vmin]
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            + 1
    } else {
        0
    };

    let cap_depth = caps
        .map(|c| c.caps().map(|cap| c.depth(cap) + 1).max().unwrap_or(0))
        .unwrap_or(0);

    let n_cols = (hi - lo + 1) as usize;
    let total_rows = tally_rows + cap_depth + 2;
    let mut grid = Grid::new(total_rows, axis_w + n_cols * col_w);
    let col = |z: i64| axis_w + (z - lo) as usize * col_w;

    if let Some(_t) = tally {
        let row_of = |v: i64| (vmax - v) as usize;
        for v in vmin..=vmax {
            grid.put_str(row_of(v), 0, &format!("{:>w$}", v, w = axis_w - 1));
        }
        for (k, z) in (lo..=hi).enumerate() {
            grid.put(row_of(values[k]), col(z), '*');
            if z < hi {
                let (v, next) = (values[k], values[k + 1]);
                if next == v + 1 {
                    grid.put(row_of(next), col(z + 1) - 1, '/');
                } else {
                    grid.put(row_of(v), col(z) + 1, '\\');
                }
            }
        }
    }

    if let Some(c) = caps {
        for cap in c.caps() {
            let row = tally_rows + c.depth(cap);
            grid.put(row, col(cap.start()), '/');
            grid.put(row, col(cap.end()), '\\');
            for k in (col(cap.start()) + 1)..col(cap.end()) {
                grid.put(row, k, '-');
            }
        }
    }

    let symbol_row = tally_rows + cap_depth;
    for z in lo..=hi {
        grid.put(symbol_row, col(z), if f.contains(z) { 'x' } else { '.' });
    }
    for (k, z) in (lo..=hi).enumerate() {
        grid.put_str(symbol_row + 1, col(z), &labels[k]);
    }

    grid.to_text()
}

fn render_svg(
    f: &WeightFunction,
    caps: Option<&CapDiagram>,
    tally: Option<&TallyProfile>,
    lo: i64,
    hi: i64,
) -> String {
    const CELL: i64 = 24;
    const MARGIN: i64 = 20;
    let x = |z: i64| MARGIN + (z - lo) * CELL;

    let values: Vec<i64> = tally
        .map(|t| {
            (lo..=hi)
                .map(|z| t.value(z).expect("window checked"))
                .collect()
        })
        .unwrap_or_default();
    let vmax = values.iter().max().copied().unwrap_or(0);
    let vmin = values.iter().min().copied().unwrap_or(0);
    let tally_height = if tally.is_some() {
        (vmax - vmin + 2) * 14
    } else {
        0
    };

    let max_cap_half_span = caps
        .and_then(|c| c.caps().map(|cap| cap.end() - cap.start()).max())
        .unwrap_or(0);
    let cap_height = 10 + max_cap_half_span * 6;

    let baseline = MARGIN + tally_height + cap_height;
    let width = 2 * MARGIN + (hi - lo) * CELL;
    let height = baseline + 36;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         font-family=\"monospace\" font-size=\"12\">\n"
    ));
    out.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{baseline}\" x2=\"{}\" y2=\"{baseline}\" stroke=\"black\"/>\n",
        x(lo),
        x(hi)
    ));
    for z in lo..=hi {
        let glyph = if f.contains(z) { "x" } else { "." };
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{glyph}</text>\n",
            x(z),
            baseline + 14
        ));
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{z}</text>\n",
            x(z),
            baseline + 30
        ));
    }
    if let Some(c) = caps {
        for cap in c.caps() {
            let (x1, x2) = (x(cap.start()), x(cap.end()));
            let ry = 8 + (cap.end() - cap.start() - 1) * 3;
            out.push_str(&format!(
                "  <path d=\"M {x1} {baseline} A {} {ry} 0 0 1 {x2} {baseline}\" \
                 fill=\"none\" stroke=\"black\"/>\n",
                (x2 - x1) / 2
            ));
        }
    }
    if let Some(_t) = tally {
        let y = |v: i64| MARGIN + (vmax - v) * 14;
        let points: Vec<String> = (lo..=hi)
            .enumerate()
            .map(|(k, z)| format!("{},{}", x(z), y(values[k])))
            .collect();
        out.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
            points.join(" ")
        ));
        for (k, z) in (lo..=hi).enumerate() {
            out.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"9\">{}</text>\n",
                x(z),
                y(values[k]) - 4,
                values[k]
            ));
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Cap;

    fn wf(entries: &[i64]) -> WeightFunction {
        WeightFunction::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn weight_line_alone() {
        let out = render(&wf(&[2, 4]), None, None, RenderStyle::Ascii).unwrap();
        let want = "\
. x . x .
1 2 3 4 5
";
        assert_eq!(out, want);
    }

    #[test]
    fn empty_weight_line() {
        let out = render(&WeightFunction::empty(), None, None, RenderStyle::Ascii).unwrap();
        let want = "\
.  .  .  .  .
-2 -1 0  1  2
";
        assert_eq!(out, want);
    }

    #[test]
    fn caps_with_nesting() {
        let f = wf(&[1, 2, 3, 7, 9]);
        let d = CapDiagram::of(&f);
        let out = render(&f, Some(&d), None, RenderStyle::Ascii).unwrap();
        let want = concat!(
            "   /--------------\\  /--\\  /--\\\n",
            "      /--------\\\n",
            "         /--\\\n",
            ".  x  x  x  .  .  .  x  .  x  .\n",
            "0  1  2  3  4  5  6  7  8  9  10\n",
        );
        assert_eq!(out, want);
    }

    #[test]
    fn matching_diagram_from_the_five_picture_list() {
        let f = wf(&[2, 4]);
        let d = CapDiagram::new(vec![Cap::new(1, 2).unwrap(), Cap::new(3, 4).unwrap()]).unwrap();
        let out = render(&f, Some(&d), None, RenderStyle::Ascii).unwrap();
        let want = "\
/-\\ /-\\
. x . x .
1 2 3 4 5
";
        assert_eq!(out, want);
    }

    #[test]
    fn tally_polyline() {
        let f = wf(&[1, 2, 3, 7, 9]);
        let t = TallyProfile::over_window(&f, 0..=9).unwrap();
        let out = render_in_window(&f, None, Some(&t), 0..=9, RenderStyle::Ascii).unwrap();
        let want = "\
3      /*\\
2    /*   *\\
1  /*       *\\ /*\\ /*
0 *           *   *
  . x x x . . . x . x
  0 1 2 3 4 5 6 7 8 9
";
        assert_eq!(out, want);
    }

    #[test]
    fn render_is_deterministic() {
        let f = wf(&[2, 4]);
        let d = CapDiagram::of(&f);
        let a = render(&f, Some(&d), None, RenderStyle::Ascii).unwrap();
        let b = render(&f, Some(&d), None, RenderStyle::Ascii).unwrap();
        assert_eq!(a, b);
        let s1 = render(&f, Some(&d), None, RenderStyle::Svg).unwrap();
        let s2 = render(&f, Some(&d), None, RenderStyle::Svg).unwrap();
        assert_eq!(s1, s2);
        assert!(s1.starts_with("<svg") && s1.ends_with("</svg>\n"));
    }

    #[test]
    fn window_must_cover_content() {
        let f = wf(&[2, 4]);
        let d = CapDiagram::of(&f);
        let err = render_in_window(&f, Some(&d), None, 1..=4, RenderStyle::Ascii);
        assert!(matches!(err, Err(Error::RenderOutsideWindow { at: 5, .. })));
        let err = render_in_window(&f, None, None, 3..=8, RenderStyle::Ascii);
        assert!(matches!(err, Err(Error::RenderOutsideWindow { at: 2, .. })));
        let t = TallyProfile::over_window(&f, 0..=4).unwrap();
        let err = render_in_window(&f, None, Some(&t), 0..=6, RenderStyle::Ascii);
        assert!(matches!(err, Err(Error::RenderOutsideWindow { .. })));
    }
}
