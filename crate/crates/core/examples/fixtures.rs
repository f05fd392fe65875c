//! Regenerate the fixture library from the hand-drawn square tangle and the tangle
//! constructors.
//!
//! ```text
//! cargo run --example fixtures -- crates/core/fixtures
//! ```

use std::path::PathBuf;

use tangle_gate::alexander::ModulePresentation;
use tangle_gate::diagram::*;
use tangle_gate::linalg::RingMatrix;
use tangle_gate::LaurentPoly;

fn finish(mut d: TangleDiagram) -> TangleDiagram {
    d = d.canonical_relabel();
    d.orient_all();
    for (i, c) in d.components.iter_mut().enumerate() {
        c.color = Some(i as u32 + 1);
    }
    d.validate().expect("generated fixture is valid");
    d
}

/// The 10-crossing tangle whose closures are 8_5 and the mirror of 8_8.
pub fn krebes() -> TangleDiagram {
    let right = tangle_stack(&horizontal_twist(4), &tangle_product(&vertical_twist(2), &vertical_twist(-3)).unwrap()).unwrap();
    tangle_product(&crossing_tangle(false), &right).unwrap()
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

/// A module with Smith diagonal `diag` (then zeros), built in Smith coordinates and disguised.
/// `gens_in_f[i]` writes generator `i` in the Smith basis; the relations are `d_k·f_k = 0`
/// rewritten in the generators and mixed by unimodular row operations.
struct Synthetic {
    name: &'static str,
    about: &'static str,
    diag: Vec<&'static str>,
    gens_in_f: Vec<Vec<&'static str>>,
    boundary: Vec<usize>,
    components: Vec<u32>,
    integer: bool,
    expect: Vec<(&'static str, &'static str)>,
}

impl Synthetic {
    fn presentation(&self) -> ModulePresentation {
        let q = self.gens_in_f.len();
        // e = L⁻¹ f, so the relation d_k·f_k = 0 is d_k times row k of L.
        let linv = RingMatrix::from_rows(self.gens_in_f.iter().map(|r| r.iter().map(|c| lp(c)).collect()).collect()).unwrap();
        let l = inverse_unitriangular(&linv);
        let mut rows: Vec<Vec<LaurentPoly>> = self.diag.iter().enumerate().map(|(k, d)| l.row(k).iter().map(|c| &lp(d) * c).collect()).collect();
        // Disguise: add m1·(row k+1) to row k and m2·(row 0) to the last row.
        let (m1, m2) = if self.integer { (lp("2"), lp("-1")) } else { (lp("x"), lp("x - 1")) };
        for k in 0..rows.len().saturating_sub(1) {
            let next = rows[k + 1].clone();
            for (a, b) in rows[k].iter_mut().zip(&next) {
                *a = &*a + &(&m1 * b);
            }
        }
        if rows.len() > 1 {
            let first = rows[0].clone();
            let last = rows.len() - 1;
            for (a, b) in rows[last].iter_mut().zip(&first) {
                *a = &*a + &(&m2 * b);
            }
        }
        while rows.len() < q {
            rows.push(vec![LaurentPoly::zero(); q]);
        }
        let names: Vec<String> = (0..q).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let text = format!(
            "gens {}\n{}boundary {}\ncomponents {}\n",
            names.join(" "),
            rows.iter()
                .map(|r| {
                    let t: Vec<String> = r.iter().zip(&names).filter(|(c, _)| !c.is_zero()).map(|(c, g)| format!("({c})*{g}")).collect();
                    format!("rel {} = 0\n", if t.is_empty() { "0".to_string() } else { t.join(" + ") })
                })
                .collect::<String>(),
            self.boundary.iter().map(|&b| names[b].as_str()).collect::<Vec<_>>().join(" "),
            self.components.iter().zip(&names).map(|(c, g)| format!("{g}:{c}")).collect::<Vec<_>>().join(" "),
        );
        ModulePresentation::parse(&text).unwrap()
    }
}

/// Inverse of an upper unitriangular matrix by back substitution.
fn inverse_unitriangular(m: &RingMatrix) -> RingMatrix {
    let n = m.rows();
    let mut inv = vec![vec![LaurentPoly::zero(); n]; n];
    for i in (0..n).rev() {
        assert!(m.get(i, i) == &LaurentPoly::one(), "generator matrix must be unitriangular");
        inv[i][i] = LaurentPoly::one();
        for j in i + 1..n {
            let mut s = LaurentPoly::zero();
            for k in i + 1..=j {
                s = &s + &(m.get(i, k) * &inv[k][j]);
            }
            inv[i][j] = -s;
        }
    }
    RingMatrix::from_rows(inv).unwrap()
}

fn synthetics() -> Vec<Synthetic> {
    let tau = "(x^2 - 4*x + 1)*(x^2 - x + 1)*(x - 1)";
    vec![
        Synthetic {
            name: "synthetic-1",
            about: "Oriented 6-tangle-like module: two free generators, torsion (x^2-4x+1)(x^2-x+1)(x-1).",
            diag: vec!["1", tau],
            gens_in_f: vec![vec!["1", "0", "x^2 - x + 1", "0"], vec!["0", "1", "0", "1"], vec!["0", "0", "1", "0"], vec!["0", "0", "0", "1"]],
            boundary: vec![0, 1],
            components: vec![1, 1, 1, 1],
            integer: false,
            expect: vec![("diagonal", "1, x^5 - 6*x^4 + 11*x^3 - 11*x^2 + 6*x - 1, 0, 0"), ("tau", "x^5 - 6*x^4 + 11*x^3 - 11*x^2 + 6*x - 1"), ("beta", "x^2 - x + 1"), ("unoriented tau*beta", "108")],
        },
        Synthetic {
            name: "synthetic-2",
            about: "One free generator; boundary meets it through x + 1.",
            diag: vec!["1", "x - 1", "(x - 1)*(x^2 + 1)"],
            gens_in_f: vec![vec!["1", "0", "0", "x + 1"], vec!["0", "1", "x", "0"], vec!["0", "0", "1", "0"], vec!["0", "0", "0", "1"]],
            boundary: vec![0],
            components: vec![1, 1, 1, 1],
            integer: false,
            expect: vec![("diagonal", "1, x - 1, x^3 - x^2 + x - 1, 0"), ("tau", "x^4 - 2*x^3 + 2*x^2 - 2*x + 1"), ("beta", "x + 1")],
        },
        Synthetic {
            name: "synthetic-3",
            about: "Integer module: torsion Z/3 + Z/3, one free generator, boundary through 2.",
            diag: vec!["1", "3", "3"],
            gens_in_f: vec![vec!["1", "0", "0", "2"], vec!["0", "1", "1", "0"], vec!["0", "0", "1", "0"], vec!["0", "0", "0", "1"]],
            boundary: vec![0],
            components: vec![1, 1, 1, 1],
            integer: true,
            expect: vec![("diagonal", "1, 3, 3, 0"), ("tau", "9"), ("beta", "2")],
        },
        Synthetic {
            name: "synthetic-4",
            about: "Torsion-free module of rank two; boundary projections with 2x2 minors of gcd x^2 - x + 1.",
            diag: vec!["1", "1", "1"],
            gens_in_f: vec![
                vec!["1", "0", "0", "x^2 - x + 1", "0"],
                vec!["0", "1", "0", "0", "1"],
                vec!["0", "0", "1", "x", "x - 1"],
                vec!["0", "0", "0", "1", "0"],
                vec!["0", "0", "0", "0", "1"],
            ],
            boundary: vec![0, 1],
            components: vec![1, 1, 1, 1, 1],
            integer: false,
            expect: vec![("diagonal", "1, 1, 1, 0, 0"), ("tau", "1"), ("beta", "x^2 - x + 1")],
        },
        Synthetic {
            name: "synthetic-5",
            about: "A closed component (color 2) misses the boundary, so beta is the first elementary divisor.",
            diag: vec!["1", "x + 1"],
            gens_in_f: vec![vec!["1", "0", "x - 1", "0"], vec!["0", "1", "0", "x"], vec!["0", "0", "1", "0"], vec!["0", "0", "0", "1"]],
            boundary: vec![0],
            components: vec![1, 1, 1, 2],
            integer: false,
            expect: vec![("diagonal", "1, x + 1, 0, 0"), ("tau", "x + 1"), ("beta", "x - 1")],
        },
    ]
}

const SQUARE_PRESENTATION: &str = "\
# Hand-computed module of the colored square tangle; tau = 1 - x + xy, beta = 1 - y + xy.
gens a b c d e f g h
rel b + y*a = c + x*b
rel c + x*b = d + y*c
rel d + y*c = e + x*d
rel b + y*h = g + x*b
rel g + x*b = f + y*g
rel f + y*g = e + x*f
boundary a d f h
components a:1 b:2 c:1 d:2 e:1 f:2 g:1 h:1
";

fn write_presentations(dir: &std::path::Path) {
    let pdir = dir.join("presentations");
    std::fs::create_dir_all(&pdir).unwrap();
    std::fs::write(pdir.join("square.pres"), SQUARE_PRESENTATION).unwrap();
    for s in synthetics() {
        let p = s.presentation();
        let mut text = format!("# {}\n", s.about);
        for (k, v) in &s.expect {
            text.push_str(&format!("# expect {k} = {v}\n"));
        }
        text.push_str(&p.to_string());
        text.push_str(&format!(
            "components {}\n",
            s.components.iter().zip(&p.generators).map(|(c, g)| format!("{g}:{c}")).collect::<Vec<_>>().join(" ")
        ));
        let path = pdir.join(format!("{}.pres", s.name));
        std::fs::write(&path, text).unwrap();
        println!("wrote {}", path.display());
    }
}

fn main() {
    let dir: PathBuf = std::env::args().nth(1).map_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"), PathBuf::from);
    let square = TangleDiagram::load(&std::fs::read_to_string(dir.join("square.tg")).expect("square.tg")).unwrap();
    let k = krebes();
    let m13 = Matching::parse("m (1 3)(2 4)").unwrap();
    let files: Vec<(&str, &str, TangleDiagram)> = vec![
        ("square-n", "Numerator closure of the square tangle; determinant 0.", numerator(&square)),
        ("square-d", "Denominator closure of the square tangle; determinant 9.", denominator(&square)),
        ("square-virtual", "Closure of the square tangle by the crossing matching (1 3)(2 4); one virtual crossing, determinant 3, bracket at zeta 9.", close(&square, &m13).unwrap()),
        ("krebes", "Ten-crossing 4-tangle; bracket ideal (17, A^4 - 5).", k.clone()),
        ("krebes-n", "Numerator closure of the krebes tangle, the knot 8_5.", numerator(&k)),
        ("krebes-d", "Denominator closure of the krebes tangle, the mirror of 8_8.", denominator(&k)),
        ("unknot", "Crossingless unknot.", denominator(&zero_tangle())),
        ("unlink2", "Two-component crossingless unlink.", numerator(&zero_tangle())),
        ("trefoil", "Trefoil, numerator of [3]; determinant 3.", numerator(&rational_tangle(&[3]))),
        ("figure-eight", "Figure-eight knot, denominator of [2, 2]; determinant 5.", denominator(&rational_tangle(&[2, 2]))),
        ("hopf", "Hopf link, numerator of [2].", numerator(&rational_tangle(&[2]))),
        ("l4a1", "The (2,4) torus link 4^2_1; bracket -A^10 + A^6 - A^2 - A^-6.", mirror(&numerator(&rational_tangle(&[4])))),
        ("l4a1-mirror", "Mirror of 4^2_1; bracket -A^-10 + A^-6 - A^-2 - A^6.", numerator(&rational_tangle(&[4]))),
        ("k8_5", "The knot 8_5 as the numerator of the krebes tangle.", numerator(&k)),
        ("k8_8-mirror", "Mirror of 8_8 as the mirrored denominator of [2, 3, 1, 2]; determinant 25.", mirror(&denominator(&rational_tangle(&[2, 3, 1, 2])))),
        ("k6_2", "6_2 in the chirality whose bracket lies in (17, A^4 - 5).", mirror(&numerator(&rational_tangle(&[3, 1, 2])))),
        ("k6_2-mirror", "Mirror of k6_2; its bracket is not in (17, A^4 - 5).", numerator(&rational_tangle(&[3, 1, 2]))),
        ("k8_1-mirror", "Mirror of 8_1 as the mirrored denominator of [6, 2]; bracket in (17, A^4 - 5).", mirror(&denominator(&rational_tangle(&[6, 2])))),
        ("k8_1", "8_1 as the denominator of [6, 2]; bracket not in (17, A^4 - 5).", denominator(&rational_tangle(&[6, 2]))),
        ("k8_14-a", "8_14 as the numerator of [2, 2, 1, 1, 2]; bracket in (17, A^4 - 5).", numerator(&rational_tangle(&[2, 2, 1, 1, 2]))),
        ("k8_14-b", "Mirror of k8_14-a; bracket not in (17, A^4 - 5).", mirror(&numerator(&rational_tangle(&[2, 2, 1, 1, 2])))),
    ];
    for (name, about, d) in files {
        let d = finish(d);
        let path = dir.join(format!("{name}.tg"));
        std::fs::write(&path, format!("# {about}\n{d}")).unwrap();
        println!("wrote {}", path.display());
    }
    write_presentations(&dir);
}
