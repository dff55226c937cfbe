# SURGE planner application
