//! Self-contained SVG line plots: fixed 800×500 viewport, axes, tick
//! labels and a single polyline. No plotting dependency.

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 20.0;
const MARGIN_BOTTOM: f64 = 50.0;

/// Emit a line plot of `points` with axis labels. Output is a pure
/// function of its inputs.
pub fn line_plot(points: &[(f64, f64)], x_label: &str, y_label: &str, title: &str) -> String {
    let (x_min, x_max) = bounds(points.iter().map(|p| p.0));
    let (y_min, y_max) = bounds(points.iter().map(|p| p.1));
    let x_span = (x_max - x_min).max(f64::MIN_POSITIVE);
    let y_span = (y_max - y_min).max(f64::MIN_POSITIVE);
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let to_px = |(x, y): (f64, f64)| {
        (
            MARGIN_LEFT + (x - x_min) / x_span * plot_w,
            MARGIN_TOP + (1.0 - (y - y_min) / y_span) * plot_h,
        )
    };

    let mut path = String::new();
    for (i, p) in points.iter().enumerate() {
        let (px, py) = to_px(*p);
        if i > 0 {
            path.push(' ');
        }
        path.push_str(&format!("{px:.3},{py:.3}"));
    }

    let x0 = MARGIN_LEFT;
    let x1 = WIDTH - MARGIN_RIGHT;
    let y0 = HEIGHT - MARGIN_BOTTOM;
    let y1 = MARGIN_TOP;
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
            "  <rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
            "  <text x=\"{tx}\" y=\"14\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">{title}</text>\n",
            "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>\n",
            "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>\n",
            "  <text x=\"{x0}\" y=\"{xt}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">{xmin:.4}</text>\n",
            "  <text x=\"{x1}\" y=\"{xt}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">{xmax:.4}</text>\n",
            "  <text x=\"{yt}\" y=\"{y0}\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">{ymin:.4}</text>\n",
            "  <text x=\"{yt}\" y=\"{y1}\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">{ymax:.4}</text>\n",
            "  <text x=\"{tx}\" y=\"{h2}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">{xl}</text>\n",
            "  <text x=\"16\" y=\"{ty}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 16 {ty})\">{yl}</text>\n",
            "  <polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"{path}\"/>\n",
            "</svg>\n"
        ),
        w = WIDTH,
        h = HEIGHT,
        h2 = HEIGHT - 12.0,
        tx = (MARGIN_LEFT + WIDTH - MARGIN_RIGHT) / 2.0,
        ty = (MARGIN_TOP + HEIGHT - MARGIN_BOTTOM) / 2.0,
        x0 = x0,
        x1 = x1,
        y0 = y0,
        y1 = y1,
        xt = y0 + 18.0,
        yt = x0 - 8.0,
        xmin = x_min,
        xmax = x_max,
        ymin = y_min,
        ymax = y_max,
        xl = x_label,
        yl = y_label,
        title = title,
        path = path,
    )
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for v in values {
        min = min.min(v);
        max = max.max(v);
    }
    if !min.is_finite() || !max.is_finite() {
        (0.0, 1.0)
    } else {
        (min, max)
    }
}
