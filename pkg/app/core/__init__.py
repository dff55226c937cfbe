# Shared infrastructure: exceptions, enums, middleware, routers, decision log
