"""
In-memory server registry.

Each server has its own asyncio lock; a deploy or complete holds it for
the whole read-decide-write, so decisions on one server are serialized
while different servers proceed independently.
"""

import asyncio
from contextlib import asynccontextmanager
from typing import AsyncIterator, Dict, List

from app.core.exceptions import ConflictException, NotFoundException
from app.modules.cluster.schemas import ServerState


class ServerStore:
    def __init__(self):
        self._servers: Dict[str, ServerState] = {}
        self._locks: Dict[str, asyncio.Lock] = {}

    def __len__(self) -> int:
        return len(self._servers)

    async def add(self, server: ServerState) -> ServerState:
        if server.name in self._servers:
            raise ConflictException(
                f"server {server.name} is already registered",
                error_code="SERVER_EXISTS",
                details={"server": server.name},
            )
        self._servers[server.name] = server
        self._locks[server.name] = asyncio.Lock()
        return server

    async def get(self, name: str) -> ServerState:
        server = self._servers.get(name)
        if server is None:
            raise NotFoundException(f"server {name} not found", details={"server": name})
        return server

    async def list(self) -> List[ServerState]:
        return [self._servers[name] for name in sorted(self._servers)]

    async def replace(self, server: ServerState) -> None:
        await self.get(server.name)
        self._servers[server.name] = server

    @asynccontextmanager
    async def exclusive(self, name: str) -> AsyncIterator[ServerState]:
        """Hold ``name``'s lock; yields the state current at acquisition."""
        await self.get(name)
        async with self._locks[name]:
            yield self._servers[name]
