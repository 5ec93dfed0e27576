from django.apps import AppConfig


class ComparisonConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.comparison'
    verbose_name = 'Partition and tree comparison'
