# Cluster module
