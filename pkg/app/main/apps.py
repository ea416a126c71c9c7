from django.apps import AppConfig


class MainConfig(AppConfig):
    name = "app.main"
    verbose_name = "zonelab"
