use super::field::Field;

/// Row-reduces `rows` in place to reduced row echelon form and returns the
/// pivot columns.
pub fn row_reduce<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()).skip(c) {
                field.sub_mul_assign(x, &factor, y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(field, &mut m).len()
}

/// A basis of `{v : M v = 0}`.
pub fn nullspace<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(field, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); ncols];
            v[fc] = field.one();
            for (row, &pc) in m.iter().zip(pivots.iter()) {
                v[pc] = field.neg(&row[fc]);
            }
            v
        })
        .collect()
}

pub fn determinant<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> F::Elem {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(&m[i][c])) else {
            return field.zero();
        };
        if p != c {
            m.swap(p, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &m[c][c]);
        let inv = field.inv(&m[c][c]).expect("nonzero pivot");
        for i in c + 1..n {
            if field.is_zero(&m[i][c]) {
                continue;
            }
            let factor = field.mul(&m[i][c], &inv);
            let pivot_row = m[c].clone();
            for (x, y) in m[i].iter_mut().zip(pivot_row.iter()).skip(c) {
                field.sub_mul_assign(x, &factor, y);
            }
        }
    }
    det
}

pub fn det3<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem], c: &[F::Elem]) -> F::Elem {
    let m = |x: &F::Elem, y: &F::Elem, z: &F::Elem| field.mul(x, &field.mul(y, z));
    let pos = field.add(
        &field.add(&m(&a[0], &b[1], &c[2]), &m(&a[1], &b[2], &c[0])),
        &m(&a[2], &b[0], &c[1]),
    );
    let neg = field.add(
        &field.add(&m(&a[2], &b[1], &c[0]), &m(&a[0], &b[2], &c[1])),
        &m(&a[1], &b[0], &c[2]),
    );
    field.sub(&pos, &neg)
}
