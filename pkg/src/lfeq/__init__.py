"""Linear functional equations and semi-homomorphisms over finite fields."""
