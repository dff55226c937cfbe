import click
import uvicorn

from app.config.settings import settings


@click.command("serve")
@click.option("--host", default=settings.HOST, show_default=True)
@click.option("--port", type=int, default=settings.PORT, show_default=True)
@click.option("--reload", is_flag=True, help="Reload on code changes (development).")
def serve(host, port, reload):
    """Run the planner HTTP service."""
    uvicorn.run("app.main:app", host=host, port=port, reload=reload)


COMMANDS = [serve]
