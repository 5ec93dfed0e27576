from django.apps import AppConfig


class OperadsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.operads'
    verbose_name = 'Operads, nerves and bar constructions'
