# Planning modules: curves, link, amat, splitplan, utility, sim, cluster
