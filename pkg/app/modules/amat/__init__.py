# AMAT module
