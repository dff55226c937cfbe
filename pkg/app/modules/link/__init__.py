# Link module
