namespace rmrank {}
