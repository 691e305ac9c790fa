//! Pseudo-HSS on saddle-point matrices `[[A, B], [Bᵀ, D]]` under `J = I_{p,q}`.

mod common;

use liesplit_core::matkit::solve_dense;
use liesplit_core::solvers::definite_factor;
use liesplit_core::{generate, j_split, BilinearStructure, DenseMatrix, PartTag};
use rand::Rng;

struct Blocks {
    a: DenseMatrix,
    b: DenseMatrix,
    d: DenseMatrix,
}

impl Blocks {
    fn random(p: usize, q: usize, seed: u64) -> Self {
        let mut rng = generate::rng(seed);
        let a = &generate::spd(p, 0.5, 3.0, &mut rng) + &generate::skew(p, &mut rng);
        let b = DenseMatrix::from_fn(p, q, |_, _| rng.gen_range(-1.0..=1.0));
        let d = generate::spd(q, 0.5, 2.0, &mut rng).scale(-1.0);
        Self { a, b, d }
    }

    fn assemble(&self) -> DenseMatrix {
        let p = self.a.rows();
        DenseMatrix::from_fn(p + self.d.rows(), p + self.d.rows(), |i, j| {
            match (i < p, j < p) {
                (true, true) => self.a[(i, j)],
                (true, false) => self.b[(i, j - p)],
                (false, true) => self.b[(j, i - p)],
                (false, false) => self.d[(i - p, j - p)],
            }
        })
    }
}

fn block(
    m: &DenseMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> DenseMatrix {
    DenseMatrix::from_fn(rows.len(), cols.len(), |i, j| {
        m[(rows.start + i, cols.start + j)]
    })
}

#[test]
fn definite_factor_is_block_diagonal() {
    let (p, q) = (4, 3);
    let blocks = Blocks::random(p, q, 1);
    let j = BilinearStructure::pseudo_euclidean(p, q);
    let hj = definite_factor(&blocks.assemble(), &j).unwrap();
    assert!(block(&hj, 0..p, 0..p).dist(&blocks.a.sym_part()) < 1e-14);
    assert!(block(&hj, p..p + q, p..p + q).dist(&blocks.d.scale(-1.0)) < 1e-14);
    assert!(block(&hj, 0..p, p..p + q).max_abs() < 1e-14);
}

#[test]
fn shifted_skew_system_reduces_to_schur_complement() {
    let (p, q) = (5, 3);
    let alpha = 0.7;
    let blocks = Blocks::random(p, q, 2);
    let j = BilinearStructure::pseudo_euclidean(p, q);
    let s = j_split(&blocks.assemble(), &j).unwrap();
    let sj = (s.part(PartTag::Lie).unwrap() * j.realize()).shifted(alpha);

    // Off the symmetric diagonal block, SJ + αI has −B, Bᵀ and αI.
    assert!(block(&sj, 0..p, p..p + q).dist(&blocks.b.scale(-1.0)) < 1e-14);
    assert!(block(&sj, p..p + q, 0..p).dist(&blocks.b.transpose()) < 1e-14);
    assert!(block(&sj, p..p + q, p..p + q).dist(&DenseMatrix::identity(q).scale(alpha)) < 1e-14);

    let mut rng = generate::rng(3);
    let rhs = generate::vector(p + q, &mut rng);
    let (f, g) = rhs.split_at(p);
    let full = common::solve_vec(&sj, &rhs);

    // ½(A − Aᵀ) + αI + (1/α)BBᵀ acting on the first block alone.
    let schur = &blocks.a.skew_part().shifted(alpha)
        + &(&blocks.b * &blocks.b.transpose()).scale(1.0 / alpha);
    let bg = blocks.b.matvec(g);
    let reduced: Vec<f64> = f.iter().zip(&bg).map(|(fi, bi)| fi + bi / alpha).collect();
    let x = solve_dense(&schur, &DenseMatrix::column(&reduced))
        .unwrap()
        .into_vec();
    let btx = blocks.b.transpose().matvec(&x);
    let y: Vec<f64> = g
        .iter()
        .zip(&btx)
        .map(|(gi, ti)| (gi - ti) / alpha)
        .collect();

    let recovered: Vec<f64> = x.into_iter().chain(y).collect();
    assert!(common::rel_dist(&recovered, &full) < 1e-12);
}
