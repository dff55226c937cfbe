# Curves module
