//! Enumerate the interior-angle count systems that constrain
//! edge-tessellating polygons.
//!
//! ```text
//! cargo run --example angle_solutions
//! ```

use edgetess::solver::{
    enumerate_multisets, max_edge_count, param_solution_quad, param_solution_triangle, solve_system,
};

fn main() {
    println!(
        "Interior angles cap at 120 degrees, so 180(e-2) <= 120e gives e <= {}.",
        max_edge_count()
    );

    for e in 3..=6 {
        let solutions = solve_system(e).unwrap();
        println!(
            "\nsolve_system({e}) -> {} solution(s): (a b c d) counting 30/45/60/90",
            solutions.len()
        );
        for s in &solutions {
            println!("  {s}");
        }
    }

    println!("\nThe closed triangle parameterization hits the same points:");
    for (s, t) in [(3, 0), (0, 1), (1, 1)] {
        println!("  s={s} t={t} -> {:?}", param_solution_triangle(s, t));
    }
    println!("Quadrilaterals: only t=4, s=0 is nonnegative:");
    for (s, t) in [(0, 0), (1, 0), (0, 4)] {
        println!("  s={s} t={t} -> {:?}", param_solution_quad(s, t));
    }

    println!("\nWidening to the full angle set (including 120):");
    for e in 3..=6 {
        let multisets = enumerate_multisets(e).unwrap();
        println!("  e={e}:");
        for m in multisets {
            println!("    {:?}", m.angles());
        }
    }
    println!("\nNote the pentagon candidate [90, 90, 120, 120, 120]: numerically");
    println!("consistent, but the tiling oracle refutes it (see refute_impostors).");
}
