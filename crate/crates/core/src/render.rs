//! SVG drawings of rank-2 alcove pictures.
//!
//! All geometry (hyperplane segments, alcove vertices) is computed exactly in
//! simple-root coordinates. Only at emission are points mapped to the plane
//! through a Cholesky factor of the Gram matrix and rounded.

use std::fmt::Write as _;

use num_traits::{Signed, Zero};

use crate::affine_group::AffineElement;
use crate::biclosed_twisted::{twisted_length_def, BiclosedSpec};
use crate::error::{Error, Result};
use crate::inversions::inversion_set;
use crate::linalg;
use crate::root_system::{Rational, RootSystem};
use crate::shi_vectors::shi_vector;

const CANVAS: f64 = 640.0;
const MARGIN: f64 = 40.0;

/// What to draw: the alcove of `element`, with hyperplanes of
/// `N(element⁻¹) ∩ B` marked for the biclosed set `B` of `spec`.
#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub element: AffineElement,
    pub spec: BiclosedSpec,
    /// Half-width of the window `{x : |⟨x, α∨⟩| ≤ radius}`. Raised if needed
    /// so that both `A_w` and `A_{w⁻¹}` are visible.
    pub radius: Option<Rational>,
}

impl RenderSpec {
    pub fn new(element: AffineElement, spec: BiclosedSpec) -> Self {
        RenderSpec {
            element,
            spec,
            radius: None,
        }
    }

    pub fn with_radius(mut self, radius: Rational) -> Self {
        self.radius = Some(radius);
        self
    }
}

type Point = [Rational; 2];

struct Segment {
    from: Point,
    to: Point,
}

/// Clips `⟨x, α∨⟩ = level` to the window, or `None` if it misses it.
fn clip(rs: &RootSystem, alpha: usize, level: i64, radius: Rational) -> Option<Segment> {
    let row = pairing_row(rs, alpha);
    let norm = row[0] * row[0] + row[1] * row[1];
    let base: Point = [
        Rational::new(level * row[0], norm),
        Rational::new(level * row[1], norm),
    ];
    let dir = [-row[1], row[0]];
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for beta in 0..rs.num_positive() {
        let b = pairing_row(rs, beta);
        let at = base[0] * b[0] + base[1] * b[1];
        let slope = dir[0] * b[0] + dir[1] * b[1];
        if slope == 0 {
            if at.abs() > radius {
                return None;
            }
            continue;
        }
        let t1 = (radius - at) / slope;
        let t2 = (-radius - at) / slope;
        let (a, z) = if t1 < t2 { (t1, t2) } else { (t2, t1) };
        lo = Some(lo.map_or(a, |v| v.max(a)));
        hi = Some(hi.map_or(z, |v| v.min(z)));
    }
    let (lo, hi) = (lo?, hi?);
    if lo >= hi {
        return None;
    }
    let at = |t: Rational| [base[0] + t * dir[0], base[1] + t * dir[1]];
    Some(Segment {
        from: at(lo),
        to: at(hi),
    })
}

fn pairing_row(rs: &RootSystem, alpha: usize) -> [i64; 2] {
    let e0 = rs.pairing_lattice(&[1, 0], alpha);
    let e1 = rs.pairing_lattice(&[0, 1], alpha);
    [e0, e1]
}

/// Vertices of the fundamental alcove: the pairwise intersections of the
/// walls `⟨x, α₁∨⟩ = 0`, `⟨x, α₂∨⟩ = 0`, `⟨x, θ∨⟩ = 1`.
fn fundamental_vertices(rs: &RootSystem) -> Vec<Point> {
    let walls = [(0usize, 0i64), (1, 0), (rs.highest_short_index(), 1)];
    let mut out = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let (a, ka) = walls[i];
            let (b, kb) = walls[j];
            let ra = pairing_row(rs, a);
            let rb = pairing_row(rs, b);
            let m = vec![
                vec![Rational::from_integer(ra[0]), Rational::from_integer(ra[1])],
                vec![Rational::from_integer(rb[0]), Rational::from_integer(rb[1])],
            ];
            let v = linalg::solve(
                m,
                vec![Rational::from_integer(ka), Rational::from_integer(kb)],
            )
            .expect("walls are transverse");
            out.push([v[0], v[1]]);
        }
    }
    out
}

struct Embedding {
    l11: f64,
    l21: f64,
    l22: f64,
    scale: f64,
}

impl Embedding {
    fn new(rs: &RootSystem, extent: f64) -> Self {
        let g = rs.gram();
        let l11 = (g[0][0] as f64).sqrt();
        let l21 = g[1][0] as f64 / l11;
        let l22 = (g[1][1] as f64 - l21 * l21).sqrt();
        let scale = (CANVAS / 2.0 - MARGIN) / extent;
        Embedding {
            l11,
            l21,
            l22,
            scale,
        }
    }

    fn plane(&self, p: &Point) -> (f64, f64) {
        let x = to_f64(p[0]);
        let y = to_f64(p[1]);
        (self.l11 * x + self.l21 * y, self.l22 * y)
    }

    fn screen(&self, p: &Point) -> (f64, f64) {
        let (x, y) = self.plane(p);
        (CANVAS / 2.0 + self.scale * x, CANVAS / 2.0 - self.scale * y)
    }
}

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn polygon(emb: &Embedding, pts: &[Point]) -> String {
    pts.iter()
        .map(|p| {
            let (x, y) = emb.screen(p);
            format!("{x:.3},{y:.3}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn act(w: &AffineElement, p: &Point) -> Point {
    let v = w.act_vector(p);
    [v[0], v[1]]
}

/// Renders the alcove picture as a standalone SVG document.
///
/// The root `<svg>` element carries `data-length`, `data-marked` and
/// `data-twisted-length` attributes, and every marked hyperplane is a
/// `<line class="marked">`.
pub fn render_alcoves(spec: &RenderSpec) -> Result<String> {
    let w = &spec.element;
    let rs = w.root_system();
    if rs.rank() != 2 {
        return Err(Error::RankNotTwo(rs.cartan_type()));
    }
    rs.check_same(spec.spec.root_system())?;
    if let Some(r) = spec.radius {
        if r <= Rational::zero() {
            return Err(Error::NonPositiveRadius);
        }
    }

    let w_inv = w.inverse();
    let reach = shi_vector(w)
        .entries()
        .iter()
        .chain(shi_vector(&w_inv).entries())
        .map(|k| k.abs())
        .max()
        .unwrap_or(0)
        + 2;
    let radius = spec.radius.map_or(Rational::from_integer(reach), |r| {
        r.max(Rational::from_integer(reach))
    });
    let levels = radius.floor().to_integer();

    let separating = inversion_set(&w_inv);
    let marked: Vec<_> = separating
        .iter()
        .filter(|r| spec.spec.contains(r))
        .copied()
        .collect();
    let length = shi_vector(w).length() as i64;
    let twisted = twisted_length_def(&spec.spec, w);

    let mut lines = Vec::new();
    for alpha in 0..rs.num_positive() {
        for k in -levels..=levels {
            if let Some(seg) = clip(rs, alpha, k, radius) {
                lines.push((alpha, k, seg));
            }
        }
    }
    let extent = lines
        .iter()
        .flat_map(|(_, _, s)| [s.from, s.to])
        .map(|p| {
            let (x, y) = Embedding::new(rs, 1.0).plane(&p);
            x.abs().max(y.abs())
        })
        .fold(1.0, f64::max);
    let emb = Embedding::new(rs, extent);

    let base = fundamental_vertices(rs);
    let a_w: Vec<Point> = base.iter().map(|p| act(w, p)).collect();
    let a_w_inv: Vec<Point> = base.iter().map(|p| act(&w_inv, p)).collect();

    let title = format!(
        "{}: ℓ={}, ℓ_A={}, |N(w⁻¹)∩A|={}",
        rs.cartan_type(),
        length,
        twisted,
        marked.len()
    );

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{c}" height="{c}" viewBox="0 0 {c} {c}" data-length="{length}" data-marked="{m}" data-twisted-length="{twisted}">"#,
        c = CANVAS,
        m = marked.len()
    );
    let _ = writeln!(svg, "<title>{title}</title>");
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r##"<polygon class="alcove-e" points="{}" fill="#d9d9d9"/>"##,
        polygon(&emb, &base)
    );
    for (alpha, k, seg) in &lines {
        let (x1, y1) = emb.screen(&seg.from);
        let (x2, y2) = emb.screen(&seg.to);
        let _ = writeln!(
            svg,
            r##"<line class="hyperplane" data-root="{}" data-level="{k}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#9a9a9a" stroke-width="0.8"/>"##,
            rs.root(*alpha).label()
        );
    }
    for r in &marked {
        if let Some(seg) = clip(rs, r.root_index(), r.level(), radius) {
            let (x1, y1) = emb.screen(&seg.from);
            let (x2, y2) = emb.screen(&seg.to);
            let _ = writeln!(
                svg,
                r##"<line class="marked" data-root="{}" data-level="{}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#c0392b" stroke-width="2.5"/>"##,
                r.root(rs).label(),
                r.level()
            );
        }
    }
    let _ = writeln!(
        svg,
        r##"<polygon class="alcove-w-inverse" points="{}" fill="none" stroke="#2c7fb8" stroke-width="1.5" stroke-dasharray="5,3"/>"##,
        polygon(&emb, &a_w_inv)
    );
    let _ = writeln!(
        svg,
        r##"<polygon class="alcove-w" points="{}" fill="none" stroke="#08306b" stroke-width="2.5"/>"##,
        polygon(&emb, &a_w)
    );
    let _ = writeln!(
        svg,
        r#"<text x="{x}" y="24" font-family="sans-serif" font-size="16" text-anchor="middle">{title}</text>"#,
        x = CANVAS / 2.0
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Reads `(ℓ, marked, ℓ_A)` back from the data attributes of a rendered
/// document.
pub fn svg_annotation(svg: &str) -> Option<(i64, i64, i64)> {
    let attr = |name: &str| -> Option<i64> {
        let key = format!("{name}=\"");
        let start = svg.find(&key)? + key.len();
        let end = start + svg[start..].find('"')?;
        svg[start..end].parse().ok()
    };
    Some((
        attr("data-length")?,
        attr("data-marked")?,
        attr("data-twisted-length")?,
    ))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::biclosed_twisted::SubsetPair;
    use crate::root_system::build_root_system;

    fn rs(name: &str) -> Arc<RootSystem> {
        build_root_system(name.parse().unwrap())
    }

    fn render(rs: &Arc<RootSystem>, word: &[usize]) -> String {
        let w = AffineElement::from_word(rs, word).unwrap();
        render_alcoves(&RenderSpec::new(
            w,
            BiclosedSpec::raw(rs, SubsetPair::empty()),
        ))
        .unwrap()
    }

    #[test]
    fn identity_has_nothing_marked() {
        let svg = render(&rs("A2"), &[]);
        assert_eq!(svg_annotation(&svg), Some((0, 0, 0)));
        assert!(svg.contains("ℓ=0, ℓ_A=0"));
        assert_eq!(svg.matches(r#"class="marked""#).count(), 0);
    }

    #[test]
    fn affine_generator_separating_hyperplane_is_unmarked() {
        let svg = render(&rs("A2"), &[0]);
        assert_eq!(svg_annotation(&svg), Some((1, 0, 1)));
    }

    #[test]
    fn b2_longest_element_marks_four() {
        let svg = render(&rs("B2"), &[1, 2, 1, 2]);
        assert_eq!(svg_annotation(&svg), Some((4, 4, -4)));
        assert_eq!(svg.matches(r#"class="marked""#).count(), 4);
    }

    #[test]
    fn output_is_deterministic() {
        let g2 = rs("G2");
        assert_eq!(render(&g2, &[0, 1, 2, 1]), render(&g2, &[0, 1, 2, 1]));
    }

    #[test]
    fn rejects_bad_inputs() {
        let a3 = rs("A3");
        let w = AffineElement::identity(&a3);
        let spec = RenderSpec::new(w, BiclosedSpec::raw(&a3, SubsetPair::empty()));
        assert!(matches!(render_alcoves(&spec), Err(Error::RankNotTwo(_))));
        let a2 = rs("A2");
        let spec = RenderSpec::new(
            AffineElement::identity(&a2),
            BiclosedSpec::raw(&a2, SubsetPair::empty()),
        )
        .with_radius(Rational::zero());
        assert!(matches!(
            render_alcoves(&spec),
            Err(Error::NonPositiveRadius)
        ));
    }

    #[test]
    fn clipped_segments_stay_in_window() {
        let b2 = rs("B2");
        let r = Rational::from_integer(3);
        for a in 0..b2.num_positive() {
            for k in -3..=3 {
                let Some(seg) = clip(&b2, a, k, r) else {
                    // at the boundary a line may only touch a corner
                    assert_eq!(k.abs(), 3);
                    continue;
                };
                for p in [seg.from, seg.to] {
                    let v = [p[0], p[1]];
                    assert_eq!(b2.pairing_at(&v, a), Rational::from_integer(k));
                    for b in 0..b2.num_positive() {
                        assert!(b2.pairing_at(&v, b).abs() <= r);
                    }
                }
            }
        }
        assert!(clip(&b2, 0, 4, r).is_none());
    }

    #[test]
    fn fundamental_alcove_vertices() {
        let a2 = rs("A2");
        let v = fundamental_vertices(&a2);
        assert_eq!(v[0], [Rational::zero(), Rational::zero()]);
        for p in v {
            let q = [p[0], p[1]];
            let t = a2.pairing_at(&q, a2.highest_short_index());
            assert!(t == Rational::zero() || t == Rational::from_integer(1));
        }
    }
}
