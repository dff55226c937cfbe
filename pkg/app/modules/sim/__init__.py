# Simulation module
