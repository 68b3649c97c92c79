//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::time::{Duration, Instant};

use mdsl_core::apps::{cipher, dh, lineq, mers, rsa, Session};
use mdsl_core::frontend::{parse_statement, preprocess, translate, Ctor, Expr, Interpreter, Repl, Stmt};
use mdsl_core::graph::{Edge, EulerHamilton, Graph};
use mdsl_core::linalg::{Matrix, Vector};
use mdsl_core::numtheory::{from_base, mod_exp, primes_to, to_base};
use mdsl_core::relation::{ClosureKind, Relation};
use mdsl_core::set::{power_set, Set};
use mdsl_core::tree::BinTree;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        match $cond {
            true => {}
            false => return Err(format!($($msg)+)),
        }
    };
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn within(what: &str, start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:?}, limit {limit:?}");
    Ok(())
}

// ---------------------------------------------------------------- criterion 1

fn normalize(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .filter(|l| !l.is_empty())
        .collect()
}

fn golden_sessions() -> Outcome {
    let start = Instant::now();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut files: Vec<_> = std::fs::read_dir(&dir).map_err(|e| e.to_string())?.map(|e| e.unwrap().path()).collect();
    files.sort();
    let mut lines = 0;
    for path in &files {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let input: String = text.lines().filter_map(|l| l.strip_prefix("> ")).map(|l| format!("{l}\n")).collect();
        let expected: String = text.lines().filter(|l| !l.starts_with("> ")).map(|l| format!("{l}\n")).collect();
        let mut out = Vec::new();
        Repl::new(Interpreter::new(), "").run(input.as_bytes(), &mut out).map_err(|e| e.to_string())?;
        let got = normalize(&String::from_utf8(out).map_err(|e| e.to_string())?);
        let want = normalize(&expected);
        ensure!(got == want, "{}: expected {want:?}, got {got:?}", path.display());
        lines += want.len();
    }
    ensure!(files.len() == 9, "expected 9 golden sessions, found {}", files.len());
    within("golden suite", start, Duration::from_secs(5))?;
    Ok(format!("{} sessions, {lines} output lines, {:?}", files.len(), start.elapsed()))
}

// ---------------------------------------------------------------- criterion 2

fn batch(run: impl FnOnce(&mut Session<&[u8], &mut Vec<u8>>) -> std::io::Result<()>, input: &str) -> Result<String, String> {
    let mut out = Vec::new();
    run(&mut Session::new(input.as_bytes(), &mut out, true)).map_err(|e| e.to_string())?;
    String::from_utf8(out).map_err(|e| e.to_string())
}

fn expect_block(text: &str, block: &str) -> Result<(), String> {
    let (got, want) = (normalize(text).join("\n"), normalize(block).join("\n"));
    ensure!(got.contains(&want), "missing {want:?} in transcript:\n{text}");
    Ok(())
}

#[allow(clippy::redundant_closure)]
fn apps_batch() -> Outcome {
    let t = batch(|s| cipher::run(s), "1\n1\nCaesar cipher\n3\n2\n2\norpgmars\n3\n3\n")?;
    expect_block(&t, "Enciphered text:\nFdhvdu#flskhu")?;
    expect_block(&t, "Deciphered text:\nprograms")?;
    let t = batch(|s| rsa::run(s), "1\n7\n111289\n[101,203,4321,12]\n2\n94423\n111289\n[44807,90666,25476,108039]\n3\n")?;
    expect_block(&t, "Encrypted message:\n[44807,90666,25476,108039]")?;
    expect_block(&t, "Decrypted message:\n[101,203,4321,12]")?;
    let t = batch(|s| dh::run(s), "15\n1009\n101\n149\n")?;
    expect_block(&t, "A's public key (yA): 4\nB's public key (yB): 685")?;
    expect_block(&t, "Shared Key by A: 908\nShared Key by B: 908")?;
    let t = batch(|s| lineq::run(s), "[[1,2],[1,1]]\n[[4],[1]]\n")?;
    expect_block(&t, "Solution matrix -\n-2.0\n3.0")?;
    let start = Instant::now();
    let t = batch(|s| mers::run(s), "1\n1000\n2\n100\n3\n")?;
    within("mersenne run", start, Duration::from_secs(60))?;
    expect_block(&t, "Powers -\n[2,3,5,7,13,17,19,31,61,89,107,127,521,607]")?;
    expect_block(
        &t,
        "Numbers -\n[3,7,31,127,8191,131071,524287,2147483647,2305843009213693951,618970019642690137449562111]",
    )?;
    Ok(format!("5 apps, mersenne run {:?}", start.elapsed()))
}

// ---------------------------------------------------------------- criterion 3

const CASES: usize = 1000;

fn random_relation(r: &mut ChaCha8Rng) -> (usize, Vec<(usize, usize)>) {
    let n = r.gen_range(1..=6);
    let pairs = (0..r.gen_range(0..=12)).map(|_| (r.gen_range(0..n), r.gen_range(0..n))).collect();
    (n, pairs)
}

fn warshall(n: usize, pairs: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    let mut m = vec![vec![false; n]; n];
    for &(a, b) in pairs {
        m[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                m[i][j] = m[i][j] || (m[i][k] && m[k][j]);
            }
        }
    }
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| m[i][j]).collect()
}

fn is_prime_trial(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn leibniz(a: &[Vec<f64>]) -> f64 {
    permutations(a.len())
        .iter()
        .map(|p| {
            let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let sign = if inversions % 2 == 0 { 1.0 } else { -1.0 };
            sign * p.iter().enumerate().map(|(i, &j)| a[i][j]).product::<f64>()
        })
        .sum()
}

/// A connected graph on `0..n`: a random spanning tree plus extra edges.
fn connected_edges(r: &mut ChaCha8Rng, n: usize, extra: usize) -> Vec<(usize, usize)> {
    let mut es: Vec<(usize, usize)> = (1..n).map(|v| (r.gen_range(0..v), v)).collect();
    for _ in 0..extra {
        es.push((r.gen_range(0..n), r.gen_range(0..n)));
    }
    es
}

/// Tries every ordering of edge traversals.
fn euler_trail(n: usize, es: &[(usize, usize)], closed: bool) -> bool {
    fn go(at: usize, start: usize, es: &[(usize, usize)], used: &mut [bool], left: usize, closed: bool) -> bool {
        if left == 0 {
            return !closed || at == start;
        }
        for i in 0..es.len() {
            if used[i] {
                continue;
            }
            let (a, b) = es[i];
            let next = if a == at {
                b
            } else if b == at {
                a
            } else {
                continue;
            };
            used[i] = true;
            if go(next, start, es, used, left - 1, closed) {
                return true;
            }
            used[i] = false;
        }
        false
    }
    (0..n).any(|s| go(s, s, es, &mut vec![false; es.len()], es.len(), closed))
}

fn hamilton_brute(n: usize, adj: &[Vec<bool>], circuit: bool) -> bool {
    n > 0
        && permutations(n).iter().any(|p| {
            p.windows(2).all(|w| adj[w[0]][w[1]]) && (!circuit || adj[p[n - 1]][p[0]])
        })
}

fn spanning_minimum(n: usize, es: &[(usize, usize, i64)]) -> Option<i64> {
    let mut best: Option<i64> = None;
    for mask in 0u32..(1 << es.len()) {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] == x { x } else { let r = find(p, p[x]); p[x] = r; r }
        }
        let mut ok = true;
        let mut total = 0;
        for (i, &(a, b, w)) in es.iter().enumerate() {
            if mask & (1 << i) != 0 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    ok = false;
                    break;
                }
                parent[ra] = rb;
                total += w;
            }
        }
        if ok {
            best = Some(best.map_or(total, |b: i64| b.min(total)));
        }
    }
    best
}

fn oracles() -> Outcome {
    let start = Instant::now();
    let mut r = rng(3);

    for _ in 0..CASES {
        let (n, pairs) = random_relation(&mut r);
        let closure: BTreeSet<_> = Relation::new(pairs.clone()).closure(ClosureKind::Transitive).to_vec().into_iter().collect();
        ensure!(closure == warshall(n, &pairs), "transitive closure of {pairs:?}");
    }

    for _ in 0..CASES {
        let m = r.gen_range(0..3000);
        let want: Vec<u64> = (0..=m).filter(|&k| is_prime_trial(k)).collect();
        ensure!(primes_to(m) == want, "primes_to({m})");
    }

    for _ in 0..CASES {
        let (a, b, m) = (r.gen_range(-1000i64..1_000_000), r.gen_range(0u32..300), r.gen_range(1i64..10_000));
        let mut naive = 1 % m;
        for _ in 0..b {
            naive = (naive * a.rem_euclid(m)) % m;
        }
        let got = mod_exp(&a.into(), &b.into(), &m.into()).map_err(|e| e.to_string())?;
        ensure!(got == BigInt::from(naive), "mod_exp({a}, {b}, {m})");
    }

    for _ in 0..CASES {
        let n = r.gen_range(1..=5);
        let rows: Vec<Vec<f64>> = (0..n).map(|_| (0..n).map(|_| r.gen_range(-9..=9) as f64).collect()).collect();
        let det = Matrix::new(rows.clone()).unwrap().determinant().map_err(|e| e.to_string())?;
        ensure!((det - leibniz(&rows)).abs() <= 1e-9, "determinant of {rows:?}");
    }

    for _ in 0..CASES {
        let n = r.gen_range(1..=5);
        let extra = r.gen_range(0..=9 - (n - 1));
        let es = connected_edges(&mut r, n, extra);
        let g: Graph<usize, i64> =
            Graph::new((0..n).collect(), es.iter().map(|&(a, b)| Edge::new(a, b, 1))).unwrap();
        // duplicate pairs merge inside the graph, so read the edges back
        let kept: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.src, e.dst)).collect();
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in &kept {
            adj[a][b] = true;
        }
        let has = |k| g.has(k).unwrap();
        ensure!(has(EulerHamilton::EulerCircuit) == euler_trail(n, &kept, true), "Euler circuit {kept:?}");
        ensure!(has(EulerHamilton::EulerPath) == euler_trail(n, &kept, false), "Euler path {kept:?}");
        ensure!(has(EulerHamilton::HamiltonianCircuit) == hamilton_brute(n, &adj, true), "Hamiltonian circuit {kept:?}");
        ensure!(has(EulerHamilton::HamiltonianPath) == hamilton_brute(n, &adj, false), "Hamiltonian path {kept:?}");
    }

    for _ in 0..CASES {
        let n = r.gen_range(1..=6);
        let mut seen = BTreeSet::new();
        let mut es = Vec::new();
        let extra = r.gen_range(0..=5);
        for (a, b) in connected_edges(&mut r, n, extra) {
            let (a, b) = (a.min(b), a.max(b));
            if a != b && seen.insert((a, b)) {
                es.push((a, b, r.gen_range(1i64..20)));
            }
        }
        let both = es.iter().flat_map(|&(a, b, w)| [Edge::new(a, b, w), Edge::new(b, a, w)]);
        let g: Graph<usize, i64> = Graph::new((0..n).collect(), both).unwrap();
        let total = |t: Vec<Edge<usize, i64>>| t.iter().map(|e| e.weight).sum::<i64>();
        let prim = total(g.prim().map_err(|e| e.to_string())?);
        let kruskal = total(g.kruskal().map_err(|e| e.to_string())?);
        let best = spanning_minimum(n, &es).unwrap_or(0);
        ensure!(prim == best && kruskal == best, "spanning tree {es:?}: prim {prim}, kruskal {kruskal}, exhaustive {best}");
    }

    within("oracle suite", start, Duration::from_secs(30))?;
    Ok(format!("6 oracles x {CASES} cases, {:?}", start.elapsed()))
}

// ---------------------------------------------------------------- criterion 4

fn numerics() -> Outcome {
    let mut r = rng(4);
    let mut worst = [0.0f64; 4];
    for _ in 0..CASES {
        let n = r.gen_range(1..=6);
        // diagonally dominant, hence well conditioned
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { r.gen_range(20.0..40.0) } else { r.gen_range(-3.0..3.0) }).collect())
            .collect();
        let a = Matrix::new(rows).unwrap();
        let prod = a.mul(&a.inverse().map_err(|e| e.to_string())?).unwrap();
        let id = Matrix::unit(n).unwrap();
        let err = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (prod.get(i, j) - id.get(i, j)).abs()).fold(0.0, f64::max);
        worst[0] = worst[0].max(err);

        let b = Matrix::new((0..n).map(|_| vec![r.gen_range(-50.0..50.0)]).collect()).unwrap();
        let x = lineq::solve_linear(&a, &b).map_err(|e| e.to_string())?;
        let res = a.mul(&x).unwrap();
        let err = (0..n).map(|i| (res.get(i, 0) - b.get(i, 0)).abs()).fold(0.0, f64::max);
        worst[3] = worst[3].max(err);

        let dim = r.gen_range(1..=8);
        let v = Vector::new((0..dim).map(|_| r.gen_range(-100.0..100.0)).collect());
        if !v.is_null() {
            worst[1] = worst[1].max((v.normalize().unwrap().magnitude() - 1.0).abs());
        }

        let a3 = Vector::new((0..3).map(|_| r.gen_range(-10.0..10.0)).collect());
        let b3 = Vector::new((0..3).map(|_| r.gen_range(-10.0..10.0)).collect());
        let lhs = a3.cross(&b3).unwrap().magnitude().powi(2);
        let rhs = a3.magnitude().powi(2) * b3.magnitude().powi(2) - a3.inner(&b3).unwrap().powi(2);
        worst[2] = worst[2].max((lhs - rhs).abs());
    }
    ensure!(worst[0] <= 1e-9, "A * inverse(A) off identity by {}", worst[0]);
    ensure!(worst[1] <= 1e-12, "normalized magnitude off by {}", worst[1]);
    ensure!(worst[2] <= 1e-9, "Lagrange identity off by {}", worst[2]);
    ensure!(worst[3] <= 1e-8, "linear residual {}", worst[3]);
    Ok(format!("worst errors: inverse {:.1e}, norm {:.1e}, Lagrange {:.1e}, residual {:.1e}", worst[0], worst[1], worst[2], worst[3]))
}

// ---------------------------------------------------------------- criterion 5

const IDENTS: &[&str] = &["x", "y", "tree", "f'", "union", "zero'", "a_b", "vNorm", "letter", "Truth"];

fn gen_expr(r: &mut ChaCha8Rng, depth: u32) -> Expr {
    let leaf = depth == 0 || r.gen_bool(0.3);
    if leaf {
        return match r.gen_range(0..5) {
            0 => Expr::Int(BigInt::from(r.gen_range(-1_000_000i64..1_000_000)) * BigInt::from(r.gen_range(1u64..u64::MAX))),
            1 => {
                let x: f64 = r.gen_range(-1e6..1e6) * 10f64.powi(r.gen_range(-20..20));
                Expr::Float(x)
            }
            2 => Expr::Bool(r.gen()),
            3 => Expr::Str((0..r.gen_range(0..6)).map(|_| r.gen::<char>()).collect()),
            _ => Expr::Var(IDENTS[r.gen_range(0..IDENTS.len())].to_string()),
        };
    }
    let many = |r: &mut ChaCha8Rng, lo: usize, hi: usize| (0..r.gen_range(lo..=hi)).map(|_| gen_expr(r, depth - 1)).collect::<Vec<_>>();
    match r.gen_range(0..4) {
        0 => Expr::Tuple(many(r, 2, 3)),
        1 => Expr::List(many(r, 0, 3)),
        2 => {
            let c = Ctor::ALL[r.gen_range(0..Ctor::ALL.len())];
            Expr::Ctor(c, many(r, c.arity(), c.arity()))
        }
        _ => {
            let head = if r.gen_bool(0.8) {
                Expr::Var(IDENTS[r.gen_range(0..IDENTS.len())].to_string())
            } else {
                gen_expr(r, depth - 1)
            };
            match head {
                Expr::Apply(..) => head,
                head => Expr::Apply(Box::new(head), many(r, 1, 3)),
            }
        }
    }
}

const BOOLEAN_OPS: &[(&str, &str)] = &[
    ("<=>", "equals"),
    ("⇔", "equals"),
    ("==>", "implies"),
    ("⇒", "implies"),
    ("\\/", "or'"),
    ("∨", "or'"),
    ("/\\", "and'"),
    ("∧", "and'"),
];

fn show(ip: &mut Interpreter, src: &str) -> Result<String, String> {
    match ip.run(src) {
        Ok(Some(v)) => Ok(v.to_string()),
        Ok(None) => Ok(String::new()),
        Err(e) => Err(format!("{src}: {e}")),
    }
}

fn frontend() -> Outcome {
    let mut r = rng(5);
    let mut roundtrips = 0;
    for _ in 0..600 {
        let e = gen_expr(&mut r, 4);
        let text = e.to_string();
        let back = parse_statement(&text).map_err(|err| format!("reparse of {text}: {err}"))?;
        ensure!(back == Stmt::Expr(e.clone()), "roundtrip of {text} gave {back}");
        let stmt = Stmt::Let("v".into(), e);
        ensure!(parse_statement(&stmt.to_string()).ok() == Some(stmt.clone()), "roundtrip of {stmt}");
        roundtrips += 1;
    }

    let sources = [
        "True ==> False\n-- comment\n\nlet x = Set {1,3..9}  -- odds\nunion x (Set [2])\n",
        "(True ∨ False) <=> (True ∧ True)\nlet m = Matrix [[1,2],\n  [3,4]]\n(f . g) 3\n10 `p` 5\n-x + 2 * y",
        "Graph (Vertices [1,2], Edges [(1,2,4),(2,1,3)])\n\"caf\u{e9}\"\n   \n",
    ];
    let mut idempotent = 0;
    for _ in 0..200 {
        let lines: Vec<String> = (0..r.gen_range(1..6)).map(|_| gen_expr(&mut r, 3).to_string()).collect();
        for src in [lines.join("\n")].iter().chain(sources.iter().map(|s| s.to_string()).collect::<Vec<_>>().iter()) {
            let once = preprocess("gen", src)?;
            let twice = preprocess("gen", &once)?;
            ensure!(once.as_bytes() == twice.as_bytes(), "preprocess not idempotent on {src:?}");
            idempotent += 1;
        }
    }
    ensure!(translate("Set {1,,").is_err(), "malformed input accepted");

    let mut ip = Interpreter::new();
    let mut checked = 0;
    for &(op, name) in BOOLEAN_OPS {
        for a in ["True", "False"] {
            for b in ["True", "False"] {
                let sym = show(&mut ip, &format!("{a} {op} {b}"))?;
                let named = show(&mut ip, &format!("{name} {a} {b}"))?;
                ensure!(sym == named, "{a} {op} {b} = {sym} but {name} gives {named}");
                checked += 1;
            }
        }
    }
    for c in mdsl_core::logic::Connective::ALL {
        for a in [true, false] {
            for b in [true, false] {
                let t = |x: bool| if x { "True" } else { "False" };
                let got = show(&mut ip, &format!("{} {} {}", c.name(), t(a), t(b)))?;
                ensure!(got == t(c.apply(a, b)), "{} {a} {b} gave {got}", c.name());
                let infix = show(&mut ip, &format!("{} `{}` {}", t(a), c.name(), t(b)))?;
                ensure!(infix == got, "backtick {} differs", c.name());
                checked += 2;
            }
        }
    }
    let algebraic = [("+", "add"), ("-", "sub"), ("*", "mul"), ("/", "divide")];
    for _ in 0..200 {
        let (x, y) = (r.gen_range(-50..50), r.gen_range(1..50));
        let (op, name) = algebraic[r.gen_range(0..algebraic.len())];
        let sym = show(&mut ip, &format!("{x} {op} {y}"))?;
        let named = show(&mut ip, &format!("{name} ({x}) {y}"))?;
        ensure!(sym == named, "{x} {op} {y}: {sym} vs {named}");
    }
    Ok(format!("{roundtrips} AST roundtrips, {idempotent} idempotence checks, {checked} boolean alias checks"))
}

// ---------------------------------------------------------------- criterion 6

fn structural() -> Outcome {
    let mut r = rng(6);
    for _ in 0..CASES {
        let xs: Vec<i64> = (0..r.gen_range(0..12)).map(|_| r.gen_range(-5..5)).collect();
        let once = Set::from_vec(xs);
        ensure!(Set::from_vec(once.to_vec()) == once, "set normalization");

        let n = r.gen_range(0..=10);
        let ps = power_set(&Set::from_vec((0..n).collect::<Vec<i64>>())).map_err(|e| e.to_string())?;
        ensure!(ps.len() == 1 << n, "power set of {n} elements has {}", ps.len());

        let (_, pairs) = random_relation(&mut r);
        let rel = Relation::new(pairs);
        for kind in [ClosureKind::Reflexive, ClosureKind::Symmetric, ClosureKind::Transitive] {
            let c = rel.closure(kind);
            ensure!(c.closure(kind) == c, "{kind:?} closure not idempotent");
            ensure!(rel.pairs().is_subset(c.pairs()), "{kind:?} closure lost pairs");
        }

        let items: Vec<i64> = (0..r.gen_range(0..20)).map(|_| r.gen_range(-50..50)).collect();
        let t: BinTree<i64> = items.iter().copied().collect();
        let order = t.inorder();
        ensure!(order.windows(2).all(|w| w[0] <= w[1]), "inorder {order:?} not sorted");
        ensure!(t.reflect().reflect() == t, "reflect not an involution");

        let base = r.gen_range(2..=64);
        let v = BigInt::from(r.gen::<u64>()) * BigInt::from(r.gen::<u32>());
        let digits = to_base(base, &v).map_err(|e| e.to_string())?;
        ensure!(from_base(base, digits.digits()).map_err(|e| e.to_string())? == v, "base {base} roundtrip of {v}");
    }
    for base in 2..=64 {
        for v in 0..200 {
            let v = BigInt::from(v);
            ensure!(from_base(base, to_base(base, &v).unwrap().digits()).unwrap() == v, "base {base} of {v}");
        }
    }
    Ok(format!("{CASES} random cases per property, bases 2-64"))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("golden REPL sessions", golden_sessions),
        ("apps in batch mode", apps_batch),
        ("oracle equivalences", oracles),
        ("numerical invariants", numerics),
        ("frontend invariants", frontend),
        ("structural invariants", structural),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
