"""Flow-adapted frame invariants for pseudo-Riemannian metrics."""
