"""Domain layer – exact values and pure algorithms. No IO, no CLI."""
